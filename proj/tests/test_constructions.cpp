#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "kdesign/complete_graph.hpp"
#include "kdesign/constructions.hpp"
#include "kdesign/errors.hpp"
#include "kdesign/subgraphs.hpp"
#include "oracles.hpp"

using namespace kdesign;

namespace {

// Parameters of an explicit block list, counted without the library verifier.
DesignParams brute_params(std::uint32_t v, const std::vector<std::vector<Variety>>& blocks) {
    std::map<std::uint32_t, std::uint64_t> r;
    std::map<std::pair<Variety, Variety>, std::uint64_t> lambda;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            ++r[b[i]];
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                ++lambda[{b[i], b[j]}];
            }
        }
    }
    REQUIRE(r.size() == v);
    REQUIRE(lambda.size() == v * (v - 1) / 2);
    std::set<std::uint64_t> rs, ls;
    for (const auto& [x, c] : r) {
        rs.insert(c);
    }
    for (const auto& [p, c] : lambda) {
        ls.insert(c);
    }
    REQUIRE(rs.size() == 1);
    REQUIRE(ls.size() == 1);
    return {v, blocks.size(), *rs.begin(), blocks.front().size(), *ls.begin()};
}

std::vector<std::vector<Variety>> brute_kp_blocks(std::uint32_t khat) {
    const std::uint32_t n = 2 * khat - 1;
    std::vector<std::vector<Variety>> out;
    for (const auto& w : oracle::paths(n, khat)) {
        std::vector<Variety> b;
        for (const auto& [x, y] : oracle::path_edge_set(w, false)) {
            b.push_back(static_cast<Variety>(oracle::pair_rank(x, y, n)));
        }
        std::sort(b.begin(), b.end());
        out.push_back(b);
    }
    return out;
}

}  // namespace

TEST_CASE("KP closed forms") {
    CHECK(kp_parameters(3) == DesignParams{10, 60, 18, 3, 4});
    CHECK(kp_parameters(2) == brute_params(3, brute_kp_blocks(2)));
    CHECK(kp_parameters(2) == DesignParams{3, 3, 2, 2, 1});
    CHECK(kp_parameters(4) == brute_params(21, brute_kp_blocks(4)));
    CHECK(kp_parameters(4) == DesignParams{21, 1260, 240, 4, 36});
    CHECK_THROWS_AS(kp_parameters(1), std::domain_error);
}

TEST_CASE("KC closed forms") {
    CHECK(kc_parameters(4) == DesignParams{10, 15, 6, 4, 2});
    CHECK(kc_parameters(3) == DesignParams{3, 1, 1, 3, 1});
    CHECK(kc_parameters(5) == DesignParams{21, 252, 60, 5, 12});
    CHECK_THROWS_AS(kc_parameters(2), std::domain_error);
}

TEST_CASE("closed forms match their falling-factorial forms up to khat = 50") {
    for (std::int64_t k = 2; k <= 50; ++k) {
        const DesignParams p = kp_parameters(static_cast<std::uint32_t>(k));
        CHECK(p.v == binom(2 * k - 1, 2));
        CHECK(2 * p.b == perm(2 * k - 1, k + 1));
        CHECK(p.r == k * perm(2 * k - 3, k - 1));
        CHECK(p.lambda == (k - 1) * perm(2 * k - 4, k - 2));
        CHECK(check_admissibility(p).ok());
    }
    for (std::int64_t k = 3; k <= 50; ++k) {
        const DesignParams p = kc_parameters(static_cast<std::uint32_t>(k));
        CHECK(p.v == binom(2 * k - 3, 2));
        CHECK(2 * k * p.b == perm(2 * k - 3, k));
        CHECK(p.r == perm(2 * k - 5, k - 2));
        CHECK(p.lambda == perm(2 * k - 6, k - 3));
        CHECK(check_admissibility(p).ok());
    }
}

TEST_CASE("built KP designs verify to their closed forms") {
    for (std::uint32_t khat = 2; khat <= 5; ++khat) {
        CAPTURE(khat);
        const Design d = build_kp(khat);
        CHECK(BigInt(d.block_count()) == kp_parameters(khat).b);
        CHECK(d.max_multiplicity() == 1);
        const BalanceReport r = verify_bibd(d);
        CHECK(r.verdict == Verdict::balanced);
        CHECK(r.params == kp_parameters(khat));
    }
    CHECK(build_kp(3).block_count() == 60);
    CHECK(verify_bibd(build_kp(4)).params->lambda == 36);
}

TEST_CASE("built KC designs verify to their closed forms") {
    for (std::uint32_t khat = 3; khat <= 6; ++khat) {
        CAPTURE(khat);
        const Design d = build_kc(khat);
        const BalanceReport r = verify_bibd(d);
        CHECK(r.verdict == (khat == 3 ? Verdict::complete : Verdict::balanced));
        CHECK(r.params == kc_parameters(khat));
    }
    const Design k3 = build_kc(3);
    REQUIRE(k3.block_count() == 1);
    CHECK(k3.blocks().begin()->first == Block{0, 1, 2});
    CHECK(build_kc(4).block_count() == 15);
    CHECK(build_kc(5).block_count() == 252);
}

TEST_CASE("capacity guard") {
    CHECK_THROWS_AS(build_kp(3, 59), CapacityError);
    CHECK_NOTHROW(build_kp(3, 60));
    CHECK_THROWS_AS(build_kc(6, 100), CapacityError);
    CHECK_THROWS_AS(build_kp(12), CapacityError);
    CHECK_THROWS_AS(verify_stream(DesignFamily::kp, 9, 1), CapacityError);
}

TEST_CASE("K5 special design is a 3-(10,4,1) design") {
    const Design d = build_k5_special();
    CHECK(d.block_count() == 30);
    CHECK(d.variety_count() == 10);
    CHECK(d.uniform_block_size() == 4u);
    const TDesignReport t3 = verify_t_design(d, 3);
    REQUIRE(t3.balanced());
    CHECK(*t3.lambda_t == 1);
}

TEST_CASE("streaming verification matches build-then-verify at every thread count") {
    for (std::uint32_t khat = 2; khat <= 5; ++khat) {
        const BalanceReport built = verify_bibd(build_kp(khat));
        for (unsigned threads : {1u, 2u, 3u, 8u}) {
            CHECK(verify_stream(DesignFamily::kp, khat, threads) == built);
        }
    }
    for (std::uint32_t khat = 3; khat <= 6; ++khat) {
        const BalanceReport built = verify_bibd(build_kc(khat));
        for (unsigned threads : {1u, 4u}) {
            CHECK(verify_stream(DesignFamily::kc, khat, threads) == built);
        }
    }
}

TEST_CASE("imbalance witness closed forms") {
    const ImbalanceWitness w53 = imbalance_witness(5, 3);
    CHECK(w53.lambda_adj == 4);
    CHECK(w53.lambda_non == 4);
    CHECK(w53.sign() == ImbalanceWitness::Sign::balanced);
    CHECK(imbalance_witness(4, 3).lambda_adj == 2);
    CHECK(imbalance_witness(4, 3).lambda_non == 4);
    CHECK(imbalance_witness(6, 3).lambda_adj == 6);
    CHECK(imbalance_witness(6, 3).lambda_non == 4);
    CHECK(to_string(imbalance_witness(4, 3).sign()) == "adjacent-fewer");
    CHECK(to_string(imbalance_witness(6, 3).sign()) == "adjacent-more");

    CHECK_THROWS_AS(imbalance_witness(5, 2), std::domain_error);
    CHECK_THROWS_AS(imbalance_witness(4, 4), std::domain_error);
    CHECK_THROWS_AS(imbalance_witness(3, 3), std::domain_error);
}

TEST_CASE("witness sign law") {
    for (std::uint32_t khat = 3; khat <= 30; ++khat) {
        for (std::uint32_t n = std::max(khat + 1, 4u); n <= 70; ++n) {
            const ImbalanceWitness w = imbalance_witness(n, khat);
            const std::int64_t d = static_cast<std::int64_t>(n) - (2 * khat - 1);
            CHECK((w.lambda_adj < w.lambda_non) == (d < 0));
            CHECK((w.lambda_adj > w.lambda_non) == (d > 0));
        }
    }
}

TEST_CASE("witness equals brute-force counts for every edge pair") {
    for (std::uint32_t n = 4; n <= 8; ++n) {
        for (std::uint32_t khat = 3; khat <= 5 && khat + 1 <= n; ++khat) {
            CAPTURE(n);
            CAPTURE(khat);
            // Oracle path set: arrangements deduplicated by reversal.
            std::map<std::pair<oracle::EdgeSet::value_type, oracle::EdgeSet::value_type>, std::uint64_t> shared;
            for (const auto& w : oracle::paths(n, khat)) {
                const auto edges = oracle::path_edge_set(w, false);
                for (auto i = edges.begin(); i != edges.end(); ++i) {
                    for (auto j = std::next(i); j != edges.end(); ++j) {
                        ++shared[{*i, *j}];
                    }
                }
            }
            const ImbalanceWitness w = imbalance_witness(n, khat);
            const auto all = oracle::pairs(n);
            for (std::size_t i = 0; i < all.size(); ++i) {
                for (std::size_t j = i + 1; j < all.size(); ++j) {
                    const auto& e = all[i];
                    const auto& f = all[j];
                    const bool adjacent = e.first == f.first || e.first == f.second || e.second == f.first ||
                                          e.second == f.second;
                    const auto it = shared.find({e, f});
                    const BigInt count = it == shared.end() ? 0 : it->second;
                    REQUIRE(count == (adjacent ? w.lambda_adj : w.lambda_non));
                }
            }
        }
    }
}
