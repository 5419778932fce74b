#include "kdesign/subgraphs.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kdesign {

namespace {

bool all_distinct(std::span<const VertexId> seq) {
    std::vector<VertexId> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

void require_word(std::span<const VertexId> seq, std::size_t min_length, const char* what) {
    if (seq.size() < min_length) {
        throw std::domain_error(std::string(what) + " needs at least " + std::to_string(min_length) +
                                " vertices");
    }
    if (!all_distinct(seq)) {
        throw std::domain_error(std::string(what) + " has a repeated vertex");
    }
}

}  // namespace

bool is_canonical_path(std::span<const VertexId> seq) noexcept {
    return seq.size() >= 2 && all_distinct(seq) && seq.front() < seq.back();
}

bool is_canonical_cycle(std::span<const VertexId> seq) noexcept {
    return seq.size() >= 3 && all_distinct(seq) &&
           std::min_element(seq.begin(), seq.end()) == seq.begin() && seq[1] < seq.back();
}

PathWord::PathWord(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (!is_canonical_path(vertices_)) {
        throw std::domain_error("not a canonical path word");
    }
}

CycleWord::CycleWord(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (!is_canonical_cycle(vertices_)) {
        throw std::domain_error("not a canonical cycle word");
    }
}

PathWord canonical_path(std::span<const VertexId> seq) {
    require_word(seq, 2, "path");
    std::vector<VertexId> word(seq.begin(), seq.end());
    if (word.front() > word.back()) {
        std::reverse(word.begin(), word.end());
    }
    return PathWord(std::move(word));
}

CycleWord canonical_cycle(std::span<const VertexId> seq) {
    require_word(seq, 3, "cycle");
    std::vector<VertexId> word(seq.begin(), seq.end());
    std::rotate(word.begin(), std::min_element(word.begin(), word.end()), word.end());
    if (word[1] > word.back()) {
        std::reverse(word.begin() + 1, word.end());
    }
    return CycleWord(std::move(word));
}

WordStream::WordStream(Kind kind, std::uint32_t n, std::uint32_t length, VertexId first_lo, VertexId first_hi)
    : kind_(kind), n_(n), first_lo_(first_lo), first_hi_(std::min(first_hi, n)), word_(length), used_(n, false) {}

// Smallest admissible vertex at `pos` given the prefix word_[0, pos).
VertexId WordStream::lower_bound(std::size_t pos) const noexcept {
    const std::size_t last = word_.size() - 1;
    if (pos == 0) {
        return first_lo_;
    }
    if (kind_ == Kind::path) {
        return pos == last ? word_[0] + 1 : 0;
    }
    return pos == last ? word_[1] + 1 : word_[0] + 1;
}

VertexId WordStream::upper_bound(std::size_t pos) const noexcept {
    return pos == 0 ? first_hi_ : n_;
}

std::optional<std::span<const VertexId>> WordStream::next() {
    if (done_) {
        return std::nullopt;
    }
    const std::size_t last = word_.size() - 1;
    std::size_t pos = 0;
    bool fresh = true;
    if (started_) {
        pos = last;
        fresh = false;
    }
    started_ = true;

    for (;;) {
        VertexId candidate;
        if (fresh) {
            candidate = lower_bound(pos);
        } else {
            used_[word_[pos]] = false;
            candidate = word_[pos] + 1;
        }
        const VertexId hi = upper_bound(pos);
        while (candidate < hi && used_[candidate]) {
            ++candidate;
        }
        if (candidate < hi) {
            word_[pos] = candidate;
            used_[candidate] = true;
            if (pos == last) {
                return std::span<const VertexId>(word_);
            }
            ++pos;
            fresh = true;
        } else {
            if (pos == 0) {
                done_ = true;
                return std::nullopt;
            }
            --pos;
            fresh = false;
        }
    }
}

WordStream enumerate_paths(std::uint32_t n, std::uint32_t khat) {
    return enumerate_paths(n, khat, 0, n);
}

WordStream enumerate_paths(std::uint32_t n, std::uint32_t khat, VertexId first_lo, VertexId first_hi) {
    if (khat < 2 || n < khat + 1) {
        throw std::domain_error("enumerate_paths: need khat >= 2 and n >= khat + 1, got n=" +
                                std::to_string(n) + " khat=" + std::to_string(khat));
    }
    return WordStream(WordStream::Kind::path, n, khat + 1, first_lo, first_hi);
}

WordStream enumerate_cycles(std::uint32_t n, std::uint32_t khat) {
    return enumerate_cycles(n, khat, 0, n);
}

WordStream enumerate_cycles(std::uint32_t n, std::uint32_t khat, VertexId first_lo, VertexId first_hi) {
    if (khat < 3 || n < khat) {
        throw std::domain_error("enumerate_cycles: need khat >= 3 and n >= khat, got n=" +
                                std::to_string(n) + " khat=" + std::to_string(khat));
    }
    return WordStream(WordStream::Kind::cycle, n, khat, first_lo, first_hi);
}

void path_edges(std::span<const VertexId> word, std::uint32_t n, std::vector<EdgeId>& out) {
    out.clear();
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        const VertexId x = word[i];
        const VertexId y = word[i + 1];
        out.push_back(x < y ? detail::edge_rank(x, y, n) : detail::edge_rank(y, x, n));
    }
    std::sort(out.begin(), out.end());
}

void cycle_edges(std::span<const VertexId> word, std::uint32_t n, std::vector<EdgeId>& out) {
    path_edges(word, n, out);
    const VertexId x = word.front();
    const VertexId y = word.back();
    const EdgeId closing = x < y ? detail::edge_rank(x, y, n) : detail::edge_rank(y, x, n);
    out.insert(std::upper_bound(out.begin(), out.end(), closing), closing);
}

Block path_to_block(const PathWord& p, std::uint32_t n) {
    for (const VertexId x : p.vertices()) {
        if (x >= n) {
            throw std::domain_error("path vertex out of range");
        }
    }
    std::vector<EdgeId> edges;
    path_edges(p.vertices(), n, edges);
    return Block(std::move(edges));
}

Block cycle_to_block(const CycleWord& c, std::uint32_t n) {
    for (const VertexId x : c.vertices()) {
        if (x >= n) {
            throw std::domain_error("cycle vertex out of range");
        }
    }
    std::vector<EdgeId> edges;
    cycle_edges(c.vertices(), n, edges);
    return Block(std::move(edges));
}

std::string_view to_string(K5Shape shape) noexcept {
    switch (shape) {
        case K5Shape::fan: return "fan";
        case K5Shape::rectangle: return "rectangle";
        case K5Shape::triangle: return "triangle";
    }
    return "?";
}

std::vector<ShapedBlock> enumerate_k5_special() {
    constexpr std::uint32_t n = 5;
    std::vector<ShapedBlock> out;

    for (VertexId centre = 0; centre < n; ++centre) {
        std::vector<EdgeId> edges;
        for (VertexId other = 0; other < n; ++other) {
            if (other != centre) {
                edges.push_back(edge_index_unordered(centre, other, n));
            }
        }
        out.push_back({K5Shape::fan, Block::from_unsorted(std::move(edges))});
    }

    auto rectangles = enumerate_cycles(n, 4);
    std::vector<EdgeId> edges;
    while (auto word = rectangles.next()) {
        cycle_edges(*word, n, edges);
        out.push_back({K5Shape::rectangle, Block(edges)});
    }

    // Triangle on {a,b,c}; the two remaining vertices give the fourth edge.
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
            for (VertexId c = b + 1; c < n; ++c) {
                std::vector<VertexId> rest;
                for (VertexId x = 0; x < n; ++x) {
                    if (x != a && x != b && x != c) {
                        rest.push_back(x);
                    }
                }
                out.push_back({K5Shape::triangle,
                               Block::from_unsorted({edge_index(a, b, n), edge_index(a, c, n),
                                                     edge_index(b, c, n), edge_index(rest[0], rest[1], n)})});
            }
        }
    }
    return out;
}

}  // namespace kdesign
