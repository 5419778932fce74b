#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

#include "kdesign/design_io.hpp"
#include "kdesign/errors.hpp"
#include "kdesign/fixtures.hpp"
#include "kdesign/verify.hpp"
#include "oracles.hpp"

using namespace kdesign;

namespace {

Design fixture_design(std::string_view name) {
    return read_design(fixture(name).text);
}

std::vector<std::vector<Variety>> block_list(const Design& d) {
    std::vector<std::vector<Variety>> out;
    for (const auto& [block, mult] : d.blocks()) {
        for (std::uint64_t m = 0; m < mult; ++m) {
            out.emplace_back(block.begin(), block.end());
        }
    }
    return out;
}

BalanceReport fold(std::uint32_t v, const std::vector<std::vector<Variety>>& blocks) {
    BalanceAccumulator acc(v);
    for (const auto& b : blocks) {
        acc.add(b);
    }
    return acc.report();
}

}  // namespace

TEST_CASE("Fano plane") {
    const BalanceReport r = verify_bibd(fixture_design("fano"));
    CHECK(r.verdict == Verdict::balanced);
    CHECK(r.params == DesignParams{7, 7, 3, 3, 1});
    CHECK_FALSE(r.witness.has_value());
    CHECK(is_symmetric(*r.params));
}

TEST_CASE("16-letter design") {
    const BalanceReport r = verify_bibd(fixture_design("sixteen_letter"));
    CHECK(r.verdict == Verdict::balanced);
    CHECK(r.params == DesignParams{16, 20, 5, 4, 1});
    CHECK_FALSE(is_symmetric(*r.params));
}

TEST_CASE("the printed 16-letter list repeats the pair e-o") {
    const Design d = fixture_design("sixteen_letter_printed");
    const BalanceReport r = verify_bibd(d);
    CHECK(r.verdict == Verdict::unbalanced);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->subset == std::vector<Variety>{4, 14});
    CHECK(r.witness->observed == oracle::count_containing(block_list(d), {4, 14}));
    CHECK(r.witness->observed == 2);
    CHECK(r.witness->expected == 1);
}

TEST_CASE("Fano with one block removed is unbalanced at pair (0,1)") {
    auto blocks = block_list(fixture_design("fano"));
    blocks.erase(std::find(blocks.begin(), blocks.end(), std::vector<Variety>{0, 1, 3}));
    Design d(7);
    for (const auto& b : blocks) {
        d.add(Block(b));
    }
    CHECK(oracle::count_containing(blocks, {0, 1}) == 0);
    CHECK(oracle::count_containing(blocks, {0, 2}) == 1);

    const BalanceReport r = verify_bibd(d);
    CHECK(r.verdict == Verdict::unbalanced);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->subset == std::vector<Variety>{0, 1});
    CHECK(r.witness->observed == 0);
    CHECK(r.witness->expected == 1);
    CHECK_FALSE(r.params.has_value());

    const TDesignReport t2 = verify_t_design(d, 2);
    CHECK_FALSE(t2.balanced());
    REQUIRE(t2.witness.has_value());
    CHECK(t2.witness->subset == std::vector<Variety>{0, 1});
    CHECK(t2.witness->observed == 0);
    CHECK(t2.witness->expected == 1);
}

TEST_CASE("uniform replication but unbalanced pairs") {
    // Two disjoint copies of K_3's edges on 6 points, plus a perfect matching
    // of triangles: every point lies in 2 blocks, pair counts differ.
    Design d(6);
    d.add(Block{0, 1, 2});
    d.add(Block{3, 4, 5});
    d.add(Block{0, 1, 3});
    d.add(Block{2, 4, 5});
    const BalanceReport r = verify_bibd(d);
    CHECK(r.verdict == Verdict::unbalanced);
    REQUIRE(r.witness.has_value());
    const auto blocks = block_list(d);
    CHECK(r.witness->observed == oracle::count_containing(blocks, r.witness->subset));
    CHECK(r.witness->observed != r.witness->expected);
}

TEST_CASE("mixed block sizes") {
    Design d(5);
    d.add(Block{0, 1, 2});
    d.add(Block{1, 2, 3});
    d.add(Block{0, 4});
    const BalanceReport r = verify_bibd(d);
    CHECK(r.verdict == Verdict::not_uniform_block_size);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->subset == std::vector<Variety>{0, 4});
    CHECK(r.witness->observed == 2);
    CHECK(r.witness->expected == 3);
    CHECK_THROWS_AS(verify_t_design(d, 2), PreconditionError);
}

TEST_CASE("singleton blocks with uneven replication") {
    // k = 1: every pair count is 0, so only replication can disagree.
    Design d(3);
    d.add(Block{0}, 2);
    d.add(Block{1});
    d.add(Block{2});
    const BalanceReport r = verify_bibd(d);
    CHECK(r.verdict == Verdict::not_uniform_replication);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->subset == std::vector<Variety>{0});
    CHECK(r.witness->observed == 2);
    CHECK(r.witness->expected == 1);
}

TEST_CASE("k = v is complete, not balanced") {
    Design d(3);
    d.add(Block{0, 1, 2});
    const BalanceReport r = verify_bibd(d);
    CHECK(r.verdict == Verdict::complete);
    CHECK(r.params == DesignParams{3, 1, 1, 3, 1});
}

TEST_CASE("degenerate designs") {
    CHECK(verify_bibd(Design(5)).verdict == Verdict::unbalanced);
    Design one(1);
    one.add(Block{0});
    CHECK(verify_bibd(one).verdict == Verdict::unbalanced);
}

TEST_CASE("malformed blocks are rejected") {
    BalanceAccumulator acc(5);
    CHECK_THROWS_AS(acc.add(std::vector<Variety>{1, 5}), MalformedInputError);
    CHECK_THROWS_AS(acc.add(std::vector<Variety>{2, 1}), MalformedInputError);
    CHECK_THROWS_AS(acc.add(std::vector<Variety>{}), MalformedInputError);
    Design d(5);
    CHECK_THROWS_AS(d.add(Block{3, 5}), MalformedInputError);
    CHECK_THROWS_AS(Block({2, 2}), MalformedInputError);
}

TEST_CASE("verification is independent of block order and partitioning") {
    std::mt19937 rng(7);
    for (const Fixture& f : fixtures()) {
        const Design d = read_design(f.text);
        auto blocks = block_list(d);
        const BalanceReport reference = verify_bibd(d);
        for (int trial = 0; trial < 20; ++trial) {
            std::shuffle(blocks.begin(), blocks.end(), rng);
            CHECK(fold(d.variety_count(), blocks) == reference);

            const std::size_t cut = rng() % (blocks.size() + 1);
            BalanceAccumulator left(d.variety_count());
            BalanceAccumulator right(d.variety_count());
            for (std::size_t i = 0; i < blocks.size(); ++i) {
                (i < cut ? left : right).add(blocks[i]);
            }
            right.merge(left);
            CHECK(right.report() == reference);
        }
    }
    // Also for an unbalanced, mixed-size stream.
    std::vector<std::vector<Variety>> mixed{{0, 1}, {2, 3, 4}, {0, 4}, {1, 3}, {0, 2, 3}};
    const BalanceReport reference = fold(5, mixed);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(mixed.begin(), mixed.end(), rng);
        CHECK(fold(5, mixed) == reference);
    }
}

TEST_CASE("multiplicity counts like repeated blocks") {
    const Design fano = fixture_design("fano");
    Design doubled(7);
    for (const auto& [block, mult] : fano.blocks()) {
        doubled.add(block, 2);
    }
    const BalanceReport r = verify_bibd(doubled);
    CHECK(r.verdict == Verdict::balanced);
    CHECK(r.params == DesignParams{7, 14, 6, 3, 2});
}

TEST_CASE("counters escalate past 64 bits instead of wrapping") {
    constexpr std::uint64_t big = std::numeric_limits<std::uint64_t>::max() - 1;
    CountTable table(3);
    table.add(0, big);
    table.add(0, 5);
    table.add(1, 3);
    table.add(1, big);
    CHECK(table.has_carries());
    CHECK(table.value(0) == BigInt(big) + 5);
    CHECK(table.equal(0, 1) == false);
    CHECK(table.value(1) == BigInt(big) + 3);
    CHECK(table.value(2) == 0);

    CountTable other(3);
    other.add(2, big);
    other.add(2, big);
    table.merge(other);
    CHECK(table.value(2) == BigInt(big) * 2);

    // Balanced design with multiplicity near 2^64: lambda must come out exact.
    BalanceAccumulator acc(3);
    for (const std::vector<Variety>& b : {std::vector<Variety>{0, 1}, {0, 2}, {1, 2}}) {
        acc.add(b, big);
        acc.add(b, big);
    }
    const BalanceReport r = acc.report();
    CHECK(r.verdict == Verdict::balanced);
    CHECK(r.params->lambda == BigInt(big) * 2);
    CHECK(r.params->r == BigInt(big) * 4);
    CHECK(r.params->b == BigInt(big) * 6);
}

TEST_CASE("t-design checks on the fixtures") {
    const Design db = fixture_design("three_design_10_4_1");
    const TDesignReport t3 = verify_t_design(db, 3);
    REQUIRE(t3.balanced());
    CHECK(*t3.lambda_t == 1);
    CHECK(t3.params() == TParams{3, 1});

    // Oracle: every one of the C(10,3) triples, counted directly.
    const auto blocks = block_list(db);
    int triples = 0;
    for (Variety a = 0; a < 10; ++a) {
        for (Variety b = a + 1; b < 10; ++b) {
            for (Variety c = b + 1; c < 10; ++c) {
                CHECK(oracle::count_containing(blocks, {a, b, c}) == 1);
                ++triples;
            }
        }
    }
    CHECK(triples == 120);

    // The same design is a 2-design; its index comes from the verifier.
    const TDesignReport t2 = verify_t_design(db, 2);
    REQUIRE(t2.balanced());
    const BalanceReport bibd = verify_bibd(db);
    REQUIRE(bibd.balanced());
    CHECK(bibd.params->lambda == *t2.lambda_t);
    CHECK(verify_t_design(db, 1).lambda_t == bibd.params->r);

    const Design fano = fixture_design("fano");
    CHECK(verify_t_design(fano, 2).lambda_t == 1);
    CHECK(verify_t_design(fano, 1).lambda_t == 3);
    const TDesignReport fano3 = verify_t_design(fano, 3);
    CHECK_FALSE(fano3.balanced());
    REQUIRE(fano3.witness);
    CHECK(fano3.witness->subset == std::vector<Variety>{0, 1, 3});
    CHECK(fano3.witness->observed == 1);
    CHECK(fano3.witness->expected == 0);
    CHECK_THROWS_AS(verify_t_design(fano, 4), std::domain_error);
    CHECK_THROWS_AS(verify_t_design(fano, 0), std::domain_error);
    CHECK_THROWS_AS(verify_t_design(Design(4), 2), PreconditionError);
}

TEST_CASE("t=2 agrees with verify_bibd on every balanced fixture") {
    for (const Fixture& f : fixtures()) {
        const Design d = read_design(f.text);
        const BalanceReport r = verify_bibd(d);
        if (r.balanced()) {
            CHECK(verify_t_design(d, 2).lambda_t == r.params->lambda);
        }
    }
}

TEST_CASE("t-design on a large variety set uses the sparse table") {
    // v = 2000, t = 3: C(v,3) is far above the dense limit. A single block
    // leaves almost every triple uncovered, so lambda_3 is not constant and the
    // witness is the block's own first triple.
    Design d(2000);
    d.add(Block{5, 17, 1999});
    const TDesignReport r = verify_t_design(d, 3);
    CHECK_FALSE(r.balanced());
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->subset == std::vector<Variety>{5, 17, 1999});
    CHECK(r.witness->observed == 1);
    CHECK(r.witness->expected == 0);
}
