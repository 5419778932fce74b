#include "kdesign/combinatorics.hpp"

#include <stdexcept>

namespace kdesign {

namespace {

void require_range(const char* op, std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) {
        throw std::domain_error(std::string(op) + ": need 0 <= k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
    }
}

}  // namespace

BigInt factorial(std::int64_t n) {
    if (n < 0) {
        throw std::domain_error("factorial of negative number");
    }
    return perm(n, n);
}

BigInt perm(std::int64_t n, std::int64_t k) {
    require_range("perm", n, k);
    BigInt result = 1;
    for (std::int64_t i = n - k + 1; i <= n; ++i) {
        result *= i;
    }
    return result;
}

BigInt binom(std::int64_t n, std::int64_t k) {
    require_range("binom", n, k);
    k = std::min(k, n - k);
    // Each partial product C(n-k+i, i) is an integer, so the division is exact.
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt parse_bigint(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("not an unsigned decimal integer: '" + text + "'");
    }
    return BigInt(text);
}

}  // namespace kdesign
