#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace kdesign {

using Variety = std::uint32_t;

/// A block: nonempty, strictly ascending sequence of variety ids.
class Block {
public:
    /// Validates that `ids` is nonempty and strictly ascending.
    explicit Block(std::vector<Variety> ids);
    Block(std::initializer_list<Variety> ids);

    /// Sorts `ids` first; duplicates are still rejected.
    static Block from_unsorted(std::vector<Variety> ids);

    std::size_t size() const noexcept { return ids_.size(); }
    Variety operator[](std::size_t i) const noexcept { return ids_[i]; }
    Variety back() const noexcept { return ids_.back(); }
    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }
    std::span<const Variety> ids() const noexcept { return ids_; }

    bool contains(Variety x) const noexcept;

    friend auto operator<=>(const Block&, const Block&) = default;

private:
    std::vector<Variety> ids_;
};

/// True iff `ids` is nonempty and strictly ascending.
bool is_canonical_block(std::span<const Variety> ids) noexcept;

}  // namespace kdesign
