#pragma once

#include <cstdint>
#include <compare>

namespace kdesign {

using VertexId = std::uint32_t;
// Dense index of an edge of K_n, also used as a variety id of graph designs.
using EdgeId = std::uint32_t;

struct EdgeEndpoints {
    VertexId a;
    VertexId b;

    friend auto operator<=>(const EdgeEndpoints&, const EdgeEndpoints&) = default;
};

/// The complete graph K_n. Edges are numbered by the lexicographic rank of
/// their endpoint pair (a, b), a < b:
///
///     (0,1) -> 0, (0,2) -> 1, ..., (0,n-1) -> n-2, (1,2) -> n-1, ...
///
/// This numbering is part of the design file format.
class CompleteGraph {
public:
    explicit CompleteGraph(std::uint32_t n);

    std::uint32_t vertex_count() const noexcept { return n_; }
    std::uint64_t edge_count() const noexcept;

    EdgeId edge(VertexId a, VertexId b) const;
    EdgeEndpoints endpoints(EdgeId id) const;

private:
    std::uint32_t n_;
};

/// C(n, 2). Throws std::domain_error for n == 0.
std::uint64_t edge_count(std::uint32_t n);

/// Rank of the pair (a, b) among all pairs of [0, n) in lexicographic order.
/// Requires a < b < n, throws std::domain_error otherwise.
EdgeId edge_index(VertexId a, VertexId b, std::uint32_t n);

/// Same as edge_index but accepts the endpoints in either order.
EdgeId edge_index_unordered(VertexId x, VertexId y, std::uint32_t n);

/// Inverse of edge_index.
EdgeEndpoints edge_endpoints(EdgeId id, std::uint32_t n);

}  // namespace kdesign

namespace kdesign::detail {

// edge_index without validation, for inner loops over known-good words.
inline EdgeId edge_rank(VertexId a, VertexId b, std::uint32_t n) noexcept {
    const std::uint64_t a64 = a;
    return static_cast<EdgeId>(a64 * n - a64 * (a64 + 1) / 2 + (b - a - 1));
}

}  // namespace kdesign::detail
