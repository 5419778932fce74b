#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "kdesign/block.hpp"
#include "kdesign/complete_graph.hpp"

namespace kdesign {

/// A path subgraph written as its vertex sequence, oriented so that the first
/// vertex is smaller than the last.
class PathWord {
public:
    /// Throws std::domain_error unless `vertices` is already canonical.
    explicit PathWord(std::vector<VertexId> vertices);

    std::span<const VertexId> vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }

    friend auto operator<=>(const PathWord&, const PathWord&) = default;

private:
    std::vector<VertexId> vertices_;
};

/// A cycle subgraph written as its vertex sequence, rotated so the minimum
/// vertex comes first and oriented so the second vertex is smaller than the
/// last. Every rotation/reflection class has exactly one such word.
class CycleWord {
public:
    /// Throws std::domain_error unless `vertices` is already canonical.
    explicit CycleWord(std::vector<VertexId> vertices);

    std::span<const VertexId> vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }

    friend auto operator<=>(const CycleWord&, const CycleWord&) = default;

private:
    std::vector<VertexId> vertices_;
};

bool is_canonical_path(std::span<const VertexId> seq) noexcept;
bool is_canonical_cycle(std::span<const VertexId> seq) noexcept;

/// Throws std::domain_error on repeated vertices or fewer than 2 vertices.
PathWord canonical_path(std::span<const VertexId> seq);
/// Throws std::domain_error on repeated vertices or fewer than 3 vertices.
CycleWord canonical_cycle(std::span<const VertexId> seq);

/// Pull-style stream of canonical words in lexicographic order.
///
/// A stream can be restricted to words whose first vertex lies in
/// [first_lo, first_hi); streams over disjoint first-vertex ranges partition
/// the full enumeration and may be consumed concurrently.
class WordStream {
public:
    enum class Kind { path, cycle };

    /// `length` is the number of vertices in each word.
    WordStream(Kind kind, std::uint32_t n, std::uint32_t length, VertexId first_lo, VertexId first_hi);

    /// Next word, or nullopt once exhausted. The span stays valid until the
    /// following call.
    std::optional<std::span<const VertexId>> next();

    std::uint32_t vertex_count() const noexcept { return n_; }

private:
    VertexId lower_bound(std::size_t pos) const noexcept;
    VertexId upper_bound(std::size_t pos) const noexcept;

    Kind kind_;
    std::uint32_t n_;
    VertexId first_lo_;
    VertexId first_hi_;
    std::vector<VertexId> word_;
    std::vector<bool> used_;
    bool started_ = false;
    bool done_ = false;
};

/// Paths with `khat` edges (khat + 1 vertices) in K_n, P(n, khat+1)/2 of them.
/// Requires khat >= 2 and n >= khat + 1 (std::domain_error otherwise).
WordStream enumerate_paths(std::uint32_t n, std::uint32_t khat);
WordStream enumerate_paths(std::uint32_t n, std::uint32_t khat, VertexId first_lo, VertexId first_hi);

/// Cycles on `khat` vertices in K_n, P(n, khat)/(2 khat) of them.
/// Requires khat >= 3 and n >= khat (std::domain_error otherwise).
WordStream enumerate_cycles(std::uint32_t n, std::uint32_t khat);
WordStream enumerate_cycles(std::uint32_t n, std::uint32_t khat, VertexId first_lo, VertexId first_hi);

/// Sorted edge ids of a path word / cycle word, written into `out`.
void path_edges(std::span<const VertexId> word, std::uint32_t n, std::vector<EdgeId>& out);
void cycle_edges(std::span<const VertexId> word, std::uint32_t n, std::vector<EdgeId>& out);

Block path_to_block(const PathWord& p, std::uint32_t n);
Block cycle_to_block(const CycleWord& c, std::uint32_t n);

enum class K5Shape { fan, rectangle, triangle };

std::string_view to_string(K5Shape shape) noexcept;

struct ShapedBlock {
    K5Shape shape;
    Block block;
};

/// The 30 four-edge blocks on K_5: 5 fans (the four edges at one vertex),
/// 15 rectangles (4-cycles) and 10 triangles with the disjoint fifth edge.
/// Emitted fans first, then rectangles, then triangles.
std::vector<ShapedBlock> enumerate_k5_special();

}  // namespace kdesign
