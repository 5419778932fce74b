#include "kdesign/constructions.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "kdesign/errors.hpp"
#include "kdesign/subgraphs.hpp"

namespace kdesign {

namespace {

void require_capacity(const BigInt& blocks, std::uint64_t max_blocks, const std::string& what) {
    if (blocks > max_blocks) {
        std::ostringstream os;
        os << what << " has " << blocks << " blocks, above the ceiling of " << max_blocks;
        throw CapacityError(os.str());
    }
}

WordStream family_stream(DesignFamily family, std::uint32_t n, std::uint32_t khat, VertexId lo, VertexId hi) {
    return family == DesignFamily::kp ? enumerate_paths(n, khat, lo, hi) : enumerate_cycles(n, khat, lo, hi);
}

template <typename Fn>
void for_each_block(DesignFamily family, std::uint32_t n, std::uint32_t khat, VertexId lo, VertexId hi,
                    Fn&& fn) {
    WordStream words = family_stream(family, n, khat, lo, hi);
    std::vector<EdgeId> edges;
    while (auto word = words.next()) {
        if (family == DesignFamily::kp) {
            path_edges(*word, n, edges);
        } else {
            cycle_edges(*word, n, edges);
        }
        fn(std::span<const EdgeId>(edges));
    }
}

Design build_family(DesignFamily family, std::uint32_t khat, std::uint32_t n, const DesignParams& params,
                    std::uint64_t max_blocks) {
    require_capacity(params.b, max_blocks, std::string(to_string(family)) + " design");
    Design design(static_cast<std::uint32_t>(edge_count(n)));
    for_each_block(family, n, khat, 0, n,
                   [&](std::span<const EdgeId> edges) { design.add(Block(std::vector<Variety>(edges.begin(), edges.end()))); });
    return design;
}

}  // namespace

KPSpec::KPSpec(std::uint32_t k) : khat(k) {
    if (k < 2) {
        throw std::domain_error("KP design needs khat >= 2, got " + std::to_string(k));
    }
}

KCSpec::KCSpec(std::uint32_t k) : khat(k) {
    if (k < 3) {
        throw std::domain_error("KC design needs khat >= 3, got " + std::to_string(k));
    }
}

DesignParams kp_parameters(std::uint32_t khat) {
    const KPSpec spec(khat);
    const std::int64_t k = spec.khat;
    DesignParams p;
    p.v = binom(2 * k - 1, 2);
    p.b = factorial(2 * k - 1) / (2 * factorial(k - 2));
    p.r = k * factorial(2 * k - 3) / factorial(k - 2);
    p.k = k;
    p.lambda = (k - 1) * factorial(2 * k - 4) / factorial(k - 2);
    if (!check_admissibility(p).ok()) {
        throw std::logic_error("KP parameters inadmissible: " + to_tuple_string(p));
    }
    return p;
}

DesignParams kc_parameters(std::uint32_t khat) {
    const KCSpec spec(khat);
    const std::int64_t k = spec.khat;
    DesignParams p;
    p.v = binom(2 * k - 3, 2);
    p.b = factorial(2 * k - 3) / (2 * k * factorial(k - 3));
    p.r = factorial(2 * k - 5) / factorial(k - 3);
    p.k = k;
    p.lambda = factorial(2 * k - 6) / factorial(k - 3);
    if (!check_admissibility(p).ok()) {
        throw std::logic_error("KC parameters inadmissible: " + to_tuple_string(p));
    }
    return p;
}

Design build_kp(std::uint32_t khat, std::uint64_t max_blocks) {
    const KPSpec spec(khat);
    return build_family(DesignFamily::kp, khat, spec.n(), kp_parameters(khat), max_blocks);
}

Design build_kc(std::uint32_t khat, std::uint64_t max_blocks) {
    const KCSpec spec(khat);
    return build_family(DesignFamily::kc, khat, spec.n(), kc_parameters(khat), max_blocks);
}

Design build_k5_special() {
    Design design(static_cast<std::uint32_t>(edge_count(5)));
    for (auto& shaped : enumerate_k5_special()) {
        design.add(std::move(shaped.block));
    }
    return design;
}

std::string_view to_string(DesignFamily family) noexcept {
    return family == DesignFamily::kp ? "kp" : "kc";
}

BalanceReport verify_stream(DesignFamily family, std::uint32_t khat, unsigned threads, std::uint64_t max_blocks) {
    const DesignParams params = family == DesignFamily::kp ? kp_parameters(khat) : kc_parameters(khat);
    const std::uint32_t n = family == DesignFamily::kp ? KPSpec(khat).n() : KCSpec(khat).n();
    require_capacity(params.b, max_blocks, std::string(to_string(family)) + " design");
    const auto v = static_cast<std::uint32_t>(edge_count(n));
    threads = std::max(1u, std::min(threads, n));

    std::vector<BalanceAccumulator> partial(threads, BalanceAccumulator(v));
    std::atomic<VertexId> next_first{0};
    auto work = [&](BalanceAccumulator& acc) {
        for (VertexId first = next_first++; first < n; first = next_first++) {
            for_each_block(family, n, khat, first, first + 1,
                           [&](std::span<const EdgeId> edges) { acc.add_unchecked(edges); });
        }
    };

    if (threads == 1) {
        work(partial[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) {
            pool.emplace_back(work, std::ref(partial[i]));
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    for (unsigned i = 1; i < threads; ++i) {
        partial[0].merge(partial[i]);
    }
    return partial[0].report();
}

ImbalanceWitness::Sign ImbalanceWitness::sign() const {
    if (lambda_adj == lambda_non) {
        return Sign::balanced;
    }
    return lambda_adj < lambda_non ? Sign::adjacent_fewer : Sign::adjacent_more;
}

std::string_view to_string(ImbalanceWitness::Sign sign) noexcept {
    switch (sign) {
        case ImbalanceWitness::Sign::balanced: return "balanced";
        case ImbalanceWitness::Sign::adjacent_fewer: return "adjacent-fewer";
        case ImbalanceWitness::Sign::adjacent_more: return "adjacent-more";
    }
    return "?";
}

ImbalanceWitness imbalance_witness(std::uint32_t n, std::uint32_t khat) {
    if (khat < 3 || n < khat + 1 || n < 4) {
        throw std::domain_error("imbalance_witness: need khat >= 3 and n >= max(khat + 1, 4), got n=" +
                                std::to_string(n) + " khat=" + std::to_string(khat));
    }
    const std::int64_t nn = n;
    const std::int64_t k = khat;
    ImbalanceWitness w{n, khat, 0, 0};
    w.lambda_adj = (k - 1) * perm(nn - 3, k - 2);
    w.lambda_non = 4 * binom(k - 1, 2) * perm(nn - 4, k - 3);
    return w;
}

}  // namespace kdesign
