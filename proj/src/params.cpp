#include "kdesign/params.hpp"

#include <sstream>
#include <stdexcept>

namespace kdesign {

std::string to_string(const DesignParams& p) {
    std::ostringstream os;
    os << "v=" << p.v << " b=" << p.b << " r=" << p.r << " k=" << p.k << " lambda=" << p.lambda;
    return os.str();
}

std::string to_tuple_string(const DesignParams& p) {
    std::ostringstream os;
    os << '(' << p.v << ',' << p.b << ',' << p.r << ',' << p.k << ',' << p.lambda << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const DesignParams& p) {
    return os << to_tuple_string(p);
}

AdmissibilityResult check_admissibility(const DesignParams& p) {
    if (p.k < 1 || p.v < 2 || p.b < 0 || p.r < 0 || p.lambda < 0) {
        throw std::domain_error("check_admissibility: need k >= 1, v >= 2 and nonnegative fields");
    }
    AdmissibilityResult result;
    if (p.v * p.r != p.b * p.k) {
        result.failure = AdmissibilityFailure::replication;
        result.lhs = p.v * p.r;
        result.rhs = p.b * p.k;
    } else if (p.r * (p.k - 1) != p.lambda * (p.v - 1)) {
        result.failure = AdmissibilityFailure::index;
        result.lhs = p.r * (p.k - 1);
        result.rhs = p.lambda * (p.v - 1);
    }
    return result;
}

std::optional<DesignParams> complete_parameters(const BigInt& v, const BigInt& k, const BigInt& lambda) {
    if (!(v > k && k >= 2 && lambda >= 1)) {
        throw std::domain_error("complete_parameters: need v > k >= 2 and lambda >= 1");
    }
    const BigInt r_num = lambda * (v - 1);
    if (r_num % (k - 1) != 0) {
        return std::nullopt;
    }
    const BigInt r = r_num / (k - 1);
    if ((v * r) % k != 0) {
        return std::nullopt;
    }
    return DesignParams{v, v * r / k, r, k, lambda};
}

bool is_symmetric(const DesignParams& p) {
    if (p.v != p.b) {
        return false;
    }
    if (p.r != p.k) {
        throw std::logic_error("symmetric parameters with r != k: " + to_tuple_string(p));
    }
    return true;
}

}  // namespace kdesign
