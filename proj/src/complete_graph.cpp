#include "kdesign/complete_graph.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace kdesign {

namespace {

constexpr std::uint64_t kMaxEdges = std::numeric_limits<EdgeId>::max();

void require_graph_size(std::uint32_t n) {
    if (n == 0) {
        throw std::domain_error("complete graph needs at least one vertex");
    }
    const std::uint64_t n64 = n;
    if (n64 * (n64 - 1) / 2 > kMaxEdges) {
        throw std::domain_error("K_" + std::to_string(n) + " has too many edges for 32-bit edge ids");
    }
}

// Rank of the first pair (a, a+1).
std::uint64_t row_start(std::uint64_t a, std::uint64_t n) {
    return a * n - a * (a + 1) / 2;
}

}  // namespace

std::uint64_t edge_count(std::uint32_t n) {
    require_graph_size(n);
    const std::uint64_t n64 = n;
    return n64 * (n64 - 1) / 2;
}

EdgeId edge_index(VertexId a, VertexId b, std::uint32_t n) {
    require_graph_size(n);
    if (a >= b || b >= n) {
        throw std::domain_error("edge_index: need a < b < n, got a=" + std::to_string(a) +
                                " b=" + std::to_string(b) + " n=" + std::to_string(n));
    }
    return detail::edge_rank(a, b, n);
}

EdgeId edge_index_unordered(VertexId x, VertexId y, std::uint32_t n) {
    return x < y ? edge_index(x, y, n) : edge_index(y, x, n);
}

EdgeEndpoints edge_endpoints(EdgeId id, std::uint32_t n) {
    const std::uint64_t count = edge_count(n);
    if (id >= count) {
        throw std::domain_error("edge_endpoints: id " + std::to_string(id) + " out of range for K_" +
                                std::to_string(n));
    }
    // Largest a with row_start(a) <= id.
    std::uint64_t lo = 0;
    std::uint64_t hi = n - 1;
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (row_start(mid, n) <= id) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const auto a = static_cast<VertexId>(lo);
    const auto b = static_cast<VertexId>(id - row_start(lo, n) + lo + 1);
    return {a, b};
}

CompleteGraph::CompleteGraph(std::uint32_t n) : n_(n) {
    require_graph_size(n);
}

std::uint64_t CompleteGraph::edge_count() const noexcept {
    const std::uint64_t n64 = n_;
    return n64 * (n64 - 1) / 2;
}

EdgeId CompleteGraph::edge(VertexId a, VertexId b) const {
    return edge_index(a, b, n_);
}

EdgeEndpoints CompleteGraph::endpoints(EdgeId id) const {
    return edge_endpoints(id, n_);
}

}  // namespace kdesign
