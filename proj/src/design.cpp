#include "kdesign/design.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "kdesign/errors.hpp"

namespace kdesign {

bool is_canonical_block(std::span<const Variety> ids) noexcept {
    if (ids.empty()) {
        return false;
    }
    return std::adjacent_find(ids.begin(), ids.end(), std::greater_equal<>{}) == ids.end();
}

Block::Block(std::vector<Variety> ids) : ids_(std::move(ids)) {
    if (!is_canonical_block(ids_)) {
        throw MalformedInputError("block must be nonempty and strictly ascending");
    }
}

Block::Block(std::initializer_list<Variety> ids) : Block(std::vector<Variety>(ids)) {}

Block Block::from_unsorted(std::vector<Variety> ids) {
    std::sort(ids.begin(), ids.end());
    return Block(std::move(ids));
}

bool Block::contains(Variety x) const noexcept {
    return std::binary_search(ids_.begin(), ids_.end(), x);
}

void Design::check_range(const Block& block) const {
    if (block.back() >= v_) {
        throw MalformedInputError("variety " + std::to_string(block.back()) +
                                  " out of range for v=" + std::to_string(v_));
    }
}

void Design::add(const Block& block, std::uint64_t multiplicity) {
    add(Block(block), multiplicity);
}

void Design::add(Block&& block, std::uint64_t multiplicity) {
    check_range(block);
    if (multiplicity == 0) {
        return;
    }
    if (total_ > std::numeric_limits<std::uint64_t>::max() - multiplicity) {
        throw CapacityError("design block count exceeds 64 bits");
    }
    blocks_[std::move(block)] += multiplicity;
    total_ += multiplicity;
}

std::uint64_t Design::multiplicity(const Block& block) const {
    const auto it = blocks_.find(block);
    return it == blocks_.end() ? 0 : it->second;
}

std::uint64_t Design::max_multiplicity() const noexcept {
    std::uint64_t best = 0;
    for (const auto& [block, count] : blocks_) {
        best = std::max(best, count);
    }
    return best;
}

std::optional<std::size_t> Design::uniform_block_size() const {
    if (blocks_.empty()) {
        return std::nullopt;
    }
    const std::size_t k = blocks_.begin()->first.size();
    for (const auto& [block, count] : blocks_) {
        if (block.size() != k) {
            return std::nullopt;
        }
    }
    return k;
}

}  // namespace kdesign
