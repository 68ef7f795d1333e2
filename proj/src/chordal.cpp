#include "lexelim/chordal.hpp"

#include <algorithm>

namespace lexelim {

std::optional<CliquePrefixViolation> first_nonclique_prefix(const Graph& g, const VertexOrdering& o) {
    require_ordering_of(g, o);
    const std::size_t n = g.order();
    // parent[i]: latest earlier neighbor of o[i]; requests[p] lists (child, u)
    // pairs asking whether u is adjacent to the vertex at position p.
    std::vector<std::vector<std::pair<std::size_t, Vertex>>> requests(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = o[i];
        std::size_t parent = n;
        for (Vertex w : g.neighbors(v)) {
            const std::size_t p = o.position(w);
            if (p < i && (parent == n || p > parent)) parent = p;
        }
        if (parent == n) continue;
        for (Vertex w : g.neighbors(v)) {
            const std::size_t p = o.position(w);
            if (p < parent) requests[parent].emplace_back(i, w);
        }
    }
    std::optional<CliquePrefixViolation> best;
    std::vector<char> mark(n, 0);
    for (std::size_t p = 0; p < n; ++p) {
        if (requests[p].empty()) continue;
        const Vertex pv = o[p];
        for (Vertex w : g.neighbors(pv)) mark[w] = 1;
        for (const auto& [child, u] : requests[p]) {
            if (!mark[u] && (!best || child < best->index)) {
                best = CliquePrefixViolation{child, std::min(u, pv), std::max(u, pv)};
            }
        }
        for (Vertex w : g.neighbors(pv)) mark[w] = 0;
    }
    return best;
}

bool is_chordal(const Graph& g) {
    if (g.order() < 4) return true;
    return !first_nonclique_prefix(g, lexbfs(g, 0)).has_value();
}

std::optional<std::vector<Vertex>> find_hole(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 4 || is_chordal(g)) return std::nullopt;
    std::vector<int> block_of(n);
    std::vector<char> allowed(n);
    for (std::size_t vi = 0; vi < n; ++vi) {
        const Vertex v = static_cast<Vertex>(vi);
        if (g.degree(v) < 2) continue;
        const VertexSet closed = closed_neighborhood(g, v);
        const auto blocks = components_without(g, closed);
        std::fill(block_of.begin(), block_of.end(), -1);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            for (Vertex u : blocks[b]) block_of[u] = static_cast<int>(b);
        }
        // Neighbors of v attached to each block.
        std::vector<std::vector<Vertex>> attached(blocks.size());
        for (Vertex x : g.neighbors(v)) {
            for (Vertex y : g.neighbors(x)) {
                const int b = block_of[y];
                if (b >= 0 && (attached[b].empty() || attached[b].back() != x)) {
                    attached[b].push_back(x);
                }
            }
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const auto& att = attached[b];
            for (std::size_t i = 0; i < att.size(); ++i) {
                for (std::size_t j = i + 1; j < att.size(); ++j) {
                    if (g.adjacent(att[i], att[j])) continue;
                    std::fill(allowed.begin(), allowed.end(), 0);
                    for (Vertex u : blocks[b]) allowed[u] = 1;
                    auto path = shortest_path(g, att[i], att[j], allowed);
                    path.push_back(v);
                    return path;
                }
            }
        }
    }
    return std::nullopt;
}

bool is_hole(const Graph& g, const std::vector<Vertex>& cycle) {
    const std::size_t k = cycle.size();
    if (k < 4) return false;
    VertexSet sorted(cycle.begin(), cycle.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
        }
    }
    return true;
}

}  // namespace lexelim
