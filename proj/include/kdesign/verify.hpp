#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kdesign/design.hpp"
#include "kdesign/params.hpp"

namespace kdesign {

/// Dense table of counters. Each slot is a 64-bit word; a slot that wraps
/// carries into a sparse high-word table, so values never silently overflow.
class CountTable {
public:
    explicit CountTable(std::size_t size = 0) : low_(size, 0) {}

    std::size_t size() const noexcept { return low_.size(); }

    void add(std::size_t i, std::uint64_t amount) {
        std::uint64_t& slot = low_[i];
        const std::uint64_t before = slot;
        slot += amount;
        if (slot < before) {
            ++high_[i];
        }
    }

    BigInt value(std::size_t i) const;
    /// Low 64 bits of slot i; the full value when has_carries() is false.
    std::uint64_t low(std::size_t i) const noexcept { return low_[i]; }
    bool equal(std::size_t i, std::size_t j) const;
    bool has_carries() const noexcept { return !high_.empty(); }

    /// Elementwise addition; tables must have the same size.
    void merge(const CountTable& other);

private:
    std::vector<std::uint64_t> low_;
    std::unordered_map<std::size_t, std::uint64_t> high_;
};

enum class Verdict {
    balanced,
    unbalanced,
    not_uniform_block_size,
    not_uniform_replication,
    complete,  // every block holds all v varieties (k == v)
};

std::string_view to_string(Verdict verdict) noexcept;

/// A subset of varieties whose count differs from the majority count.
struct Witness {
    std::vector<Variety> subset;
    BigInt observed;
    BigInt expected;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct BalanceReport {
    Verdict verdict = Verdict::unbalanced;
    std::optional<Witness> witness;
    std::optional<DesignParams> params;

    bool balanced() const noexcept { return verdict == Verdict::balanced; }

    friend bool operator==(const BalanceReport&, const BalanceReport&) = default;
};

std::string describe(const Witness& w);

/// Single-pass fold computing everything verify_bibd needs: a block-size
/// histogram, per-variety replication counts and per-pair co-occurrence
/// counts (indexed by the K_v pair ranking).
///
/// Accumulators over disjoint parts of a block stream can be merged; the
/// final report does not depend on block order or on how the stream was split.
class BalanceAccumulator {
public:
    explicit BalanceAccumulator(std::uint32_t v);

    /// `block` must be strictly ascending with ids < v; MalformedInputError otherwise.
    void add(std::span<const Variety> block, std::uint64_t multiplicity = 1);
    /// Same as add() for blocks already known to be well formed.
    void add_unchecked(std::span<const Variety> block, std::uint64_t multiplicity = 1);

    void merge(const BalanceAccumulator& other);

    std::uint32_t variety_count() const noexcept { return v_; }
    const BigInt& block_count() const noexcept { return blocks_; }

    BalanceReport report() const;

private:
    std::uint32_t v_;
    BigInt blocks_ = 0;
    std::map<std::size_t, BigInt> sizes_;
    // First block seen for each size, for witnesses.
    std::map<std::size_t, std::vector<Variety>> size_examples_;
    CountTable replication_;
    CountTable pairs_;
};

/// Accumulates every block of `d` (with multiplicity) and reports.
BalanceReport verify_bibd(const Design& d);

struct TDesignReport {
    std::uint32_t t = 0;
    std::optional<BigInt> lambda_t;
    std::optional<Witness> witness;

    bool balanced() const noexcept { return lambda_t.has_value(); }
    std::optional<TParams> params() const;
};

/// Counts, for every t-subset of the varieties, the blocks that contain it.
/// Requires a nonempty design with uniform block size k (PreconditionError)
/// and 1 <= t <= k (std::domain_error).
TDesignReport verify_t_design(const Design& d, std::uint32_t t);

}  // namespace kdesign
