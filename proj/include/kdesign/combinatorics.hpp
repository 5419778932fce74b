#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kdesign {

using BigInt = boost::multiprecision::cpp_int;

/// n! exactly. Throws std::domain_error for n < 0.
BigInt factorial(std::int64_t n);

/// Falling factorial P(n, k) = n! / (n - k)!. Requires 0 <= k <= n.
BigInt perm(std::int64_t n, std::int64_t k);

/// Binomial coefficient C(n, k). Requires 0 <= k <= n.
BigInt binom(std::int64_t n, std::int64_t k);

/// Parses an unsigned decimal integer of any length; throws std::invalid_argument.
BigInt parse_bigint(const std::string& text);

}  // namespace kdesign
