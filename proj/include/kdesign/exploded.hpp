#pragma once

#include <cstdint>

#include "kdesign/constructions.hpp"
#include "kdesign/design.hpp"
#include "kdesign/params.hpp"

namespace kdesign {

/// Block size of a j-exploded design; 2 <= j <= k of the source design.
struct ExplodeSpec {
    std::uint32_t j;

    /// Throws std::domain_error unless 2 <= j <= k.
    ExplodeSpec(std::uint32_t j, std::uint64_t k);
};

/// Parameters of the j-exploded design of a (v, b, r, k, lambda) design:
/// (v, b C(k,j), r C(k-1,j-1), j, lambda C(k-2,j-2)).
DesignParams exploded_parameters(const DesignParams& p, std::uint32_t j);

/// Replaces every block by all of its j-subsets, keeping multiplicities, so
/// the result may contain repeated blocks. Throws PreconditionError if block
/// sizes are not uniform and CapacityError if the result would exceed
/// `max_blocks` blocks.
Design explode_design(const Design& d, std::uint32_t j, std::uint64_t max_blocks = kDefaultMaxBlocks);

/// True iff the khat-exploded KC design with block size khat + 1 is exactly
/// the KP design with block size khat, every block appearing once.
bool check_kp_equals_exploded_kc(std::uint32_t khat, std::uint64_t max_blocks = kDefaultMaxBlocks);

}  // namespace kdesign
