#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "kdesign/combinatorics.hpp"

namespace kdesign {

/// (v, b, r, k, lambda) of a block design, in exact arithmetic.
struct DesignParams {
    BigInt v;
    BigInt b;
    BigInt r;
    BigInt k;
    BigInt lambda;

    friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

/// `v=.. b=.. r=.. k=.. lambda=..`
std::string to_string(const DesignParams& p);
/// `(v,b,r,k,lambda)`
std::string to_tuple_string(const DesignParams& p);
std::ostream& operator<<(std::ostream& os, const DesignParams& p);

struct TParams {
    std::uint32_t t;
    BigInt lambda_t;

    friend bool operator==(const TParams&, const TParams&) = default;
};

enum class AdmissibilityFailure {
    replication,  // v*r != b*k
    index,        // r*(k-1) != lambda*(v-1)
};

struct AdmissibilityResult {
    std::optional<AdmissibilityFailure> failure;
    // Both sides of the failing identity, when there is one.
    BigInt lhs;
    BigInt rhs;

    bool ok() const noexcept { return !failure.has_value(); }
};

/// Checks v*r = b*k and r*(k-1) = lambda*(v-1), in that order.
/// Requires k >= 1 and v >= 2 (std::domain_error otherwise).
AdmissibilityResult check_admissibility(const DesignParams& p);

/// Fills in r = lambda(v-1)/(k-1) and b = v r / k for a (v,k,lambda)-design.
/// Returns nullopt when either division is not exact. Requires v > k >= 2 and
/// lambda >= 1.
std::optional<DesignParams> complete_parameters(const BigInt& v, const BigInt& k, const BigInt& lambda);

/// v == b. For admissible parameters this forces r == k; a violation throws
/// std::logic_error.
bool is_symmetric(const DesignParams& p);

}  // namespace kdesign
