#include "kdesign/exploded.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kdesign/errors.hpp"

namespace kdesign {

ExplodeSpec::ExplodeSpec(std::uint32_t j_, std::uint64_t k) : j(j_) {
    if (j < 2 || j > k) {
        throw std::domain_error("explode: need 2 <= j <= k, got j=" + std::to_string(j) + " k=" +
                                std::to_string(k));
    }
}

DesignParams exploded_parameters(const DesignParams& p, std::uint32_t j) {
    if (p.k < 0 || p.k > std::numeric_limits<std::int64_t>::max()) {
        throw std::domain_error("explode: block size out of range");
    }
    const auto k = p.k.convert_to<std::int64_t>();
    const ExplodeSpec spec(j, static_cast<std::uint64_t>(k));
    const std::int64_t jj = spec.j;
    return DesignParams{p.v, p.b * binom(k, jj), p.r * binom(k - 1, jj - 1), BigInt(jj),
                        p.lambda * binom(k - 2, jj - 2)};
}

Design explode_design(const Design& d, std::uint32_t j, std::uint64_t max_blocks) {
    const auto k = d.uniform_block_size();
    if (!k) {
        throw PreconditionError("explode: design needs a uniform block size");
    }
    const ExplodeSpec spec(j, *k);
    const BigInt total = BigInt(d.block_count()) * binom(static_cast<std::int64_t>(*k), spec.j);
    if (total > max_blocks) {
        std::ostringstream os;
        os << "exploded design has " << total << " blocks, above the ceiling of " << max_blocks;
        throw CapacityError(os.str());
    }

    Design out(d.variety_count());
    std::vector<std::uint32_t> idx(spec.j);
    std::vector<Variety> subset(spec.j);
    for (const auto& [block, mult] : d.blocks()) {
        for (std::uint32_t i = 0; i < spec.j; ++i) {
            idx[i] = i;
        }
        for (;;) {
            for (std::uint32_t i = 0; i < spec.j; ++i) {
                subset[i] = block[idx[i]];
            }
            out.add(Block(subset), mult);

            std::uint32_t i = spec.j;
            while (i > 0 && idx[i - 1] == *k - spec.j + (i - 1)) {
                --i;
            }
            if (i == 0) {
                break;
            }
            ++idx[i - 1];
            for (std::uint32_t m = i; m < spec.j; ++m) {
                idx[m] = idx[m - 1] + 1;
            }
        }
    }
    return out;
}

bool check_kp_equals_exploded_kc(std::uint32_t khat, std::uint64_t max_blocks) {
    const KPSpec spec(khat);
    const Design kp = build_kp(spec.khat, max_blocks);
    const Design exploded = explode_design(build_kc(spec.khat + 1, max_blocks), spec.khat, max_blocks);
    return exploded.max_multiplicity() == 1 && exploded == kp;
}

}  // namespace kdesign
