#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>

#include "kdesign/block.hpp"

namespace kdesign {

/// A block design: a variety count v and a multiset of blocks over [0, v).
///
/// Blocks are kept as a block -> multiplicity map ordered by the blocks'
/// id sequences, so iteration order is canonical and two designs compare
/// equal iff they have the same v and the same multiset of blocks.
class Design {
public:
    using BlockMap = std::map<Block, std::uint64_t>;

    explicit Design(std::uint32_t v) : v_(v) {}

    std::uint32_t variety_count() const noexcept { return v_; }

    /// Total number of blocks counting multiplicity.
    std::uint64_t block_count() const noexcept { return total_; }
    std::size_t distinct_block_count() const noexcept { return blocks_.size(); }
    bool empty() const noexcept { return blocks_.empty(); }

    /// Throws MalformedInputError if a variety is >= v.
    void add(const Block& block, std::uint64_t multiplicity = 1);
    void add(Block&& block, std::uint64_t multiplicity = 1);

    std::uint64_t multiplicity(const Block& block) const;
    std::uint64_t max_multiplicity() const noexcept;

    /// Common block size, or nullopt if the design is empty or sizes differ.
    std::optional<std::size_t> uniform_block_size() const;

    const BlockMap& blocks() const noexcept { return blocks_; }

    friend bool operator==(const Design&, const Design&) = default;

private:
    void check_range(const Block& block) const;

    std::uint32_t v_;
    std::uint64_t total_ = 0;
    BlockMap blocks_;
};

}  // namespace kdesign
