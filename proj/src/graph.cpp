#include "lexelim/graph.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <queue>

namespace lexelim {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidEdge: return "InvalidEdge";
        case ErrorCode::InvalidVertex: return "InvalidVertex";
        case ErrorCode::InvalidOrdering: return "InvalidOrdering";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::NotConnected: return "NotConnected";
        case ErrorCode::NotLexBFS: return "NotLexBFS";
        case ErrorCode::TheoremViolation: return "TheoremViolation";
        case ErrorCode::LemmaViolation: return "LemmaViolation";
        case ErrorCode::NotAWheel: return "NotAWheel";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

struct Graph::DenseMatrix {
    std::once_flag once;
    bool built = false;
    std::size_t words_per_row = 0;
    std::vector<std::uint64_t> bits;
};

Graph::Graph(std::size_t n, std::span<const Edge> edges)
    : offsets_(n + 1, 0), matrix_(std::make_shared<DenseMatrix>()) {
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
            static_cast<std::size_t>(v) >= n) {
            throw Error(ErrorCode::InvalidVertex, "edge (" + std::to_string(u) + ", " +
                                                      std::to_string(v) + ") out of range");
        }
        if (u == v) {
            throw Error(ErrorCode::InvalidEdge, "self-loop at " + std::to_string(u));
        }
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    targets_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        targets_[fill[u]++] = v;
        targets_[fill[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto first = targets_.begin() + offsets_[v];
        auto last = targets_.begin() + offsets_[v + 1];
        std::sort(first, last);
        if (auto dup = std::adjacent_find(first, last); dup != last) {
            throw Error(ErrorCode::InvalidEdge, "duplicate edge (" + std::to_string(v) + ", " +
                                                    std::to_string(*dup) + ")");
        }
    }
    if (n <= kSmallGraphLimit) {
        rows_.assign(n, 0);
        for (std::size_t v = 0; v < n; ++v) {
            for (Vertex w : neighbors(static_cast<Vertex>(v))) rows_[v] |= std::uint64_t{1} << w;
        }
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (!rows_.empty()) return (rows_[u] >> v) & 1U;
    if (matrix_ && matrix_->built) {
        const auto& mat = *matrix_;
        return (mat.bits[u * mat.words_per_row + (v >> 6)] >> (v & 63)) & 1U;
    }
    // Search the shorter list.
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::materialize_matrix(std::size_t cap) const {
    if (is_small()) return true;
    if (order() > cap || !matrix_) return has_matrix();
    std::call_once(matrix_->once, [this] {
        auto& mat = *matrix_;
        const std::size_t n = order();
        mat.words_per_row = (n + 63) / 64;
        mat.bits.assign(n * mat.words_per_row, 0);
        for (std::size_t u = 0; u < n; ++u) {
            for (Vertex w : neighbors(static_cast<Vertex>(u))) {
                mat.bits[u * mat.words_per_row + (w >> 6)] |= std::uint64_t{1} << (w & 63);
            }
        }
        mat.built = true;
    });
    return true;
}

bool Graph::has_matrix() const noexcept {
    return is_small() || (matrix_ && matrix_->built);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (std::size_t u = 0; u < order(); ++u) {
        for (Vertex w : neighbors(static_cast<Vertex>(u))) {
            if (static_cast<Vertex>(u) < w) out.emplace_back(static_cast<Vertex>(u), w);
        }
    }
    return out;
}

WeightedGraph::WeightedGraph(Graph g, std::vector<Weight> w)
    : graph(std::move(g)), weights(std::move(w)) {
    if (weights.size() != graph.order()) {
        throw Error(ErrorCode::InvalidParameter, "weight vector length " +
                                                     std::to_string(weights.size()) +
                                                     " does not match order " +
                                                     std::to_string(graph.order()));
    }
    for (Weight x : weights) {
        if (x < 0) throw Error(ErrorCode::InvalidParameter, "negative weight");
    }
}

WeightedGraph::WeightedGraph(Graph g) : graph(std::move(g)), weights(graph.order(), 1) {}

Weight WeightedGraph::weight_of(std::span<const Vertex> vertices) const {
    Weight total = 0;
    for (Vertex v : vertices) total += weights[v];
    return total;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
    return Graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

VertexSet make_vertex_set(const Graph& g, std::span<const Vertex> vertices) {
    VertexSet s(vertices.begin(), vertices.end());
    std::sort(s.begin(), s.end());
    for (Vertex v : s) {
        if (!g.contains(v)) {
            throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
        }
    }
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
        throw Error(ErrorCode::InvalidVertex, "duplicate vertex in set");
    }
    return s;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    InducedSubgraph out;
    out.to_parent = make_vertex_set(g, vertices);
    std::vector<Vertex> local(g.order(), -1);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
        local[out.to_parent[i]] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
        for (Vertex w : g.neighbors(out.to_parent[i])) {
            if (local[w] > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), local[w]);
        }
    }
    out.graph = Graph(out.to_parent.size(), edges);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices,
                                 std::vector<Vertex>& scratch) {
    InducedSubgraph out;
    out.to_parent.assign(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
        scratch[out.to_parent[i]] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
        for (Vertex w : g.neighbors(out.to_parent[i])) {
            if (scratch[w] > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), scratch[w]);
        }
    }
    for (Vertex v : out.to_parent) scratch[v] = -1;
    out.graph = Graph(out.to_parent.size(), edges);
    return out;
}

std::vector<VertexSet> components_without(const Graph& g, std::span<const Vertex> removed) {
    const std::size_t n = g.order();
    std::vector<char> seen(n, 0);
    for (Vertex v : removed) seen[v] = 1;
    std::vector<VertexSet> blocks;
    std::vector<Vertex> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet block;
        seen[s] = 1;
        stack.push_back(static_cast<Vertex>(s));
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            block.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;
}

std::vector<VertexSet> components(const Graph& g) { return components_without(g, {}); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_complete(const Graph& g) {
    const std::size_t n = g.order();
    return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Edge> edges;
    std::vector<char> mark(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        for (Vertex w : g.neighbors(static_cast<Vertex>(u))) mark[w] = 1;
        for (std::size_t v = u + 1; v < n; ++v) {
            if (!mark[v]) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        for (Vertex w : g.neighbors(static_cast<Vertex>(u))) mark[w] = 0;
    }
    return Graph(n, edges);
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (!g.adjacent(vertices[i], vertices[j])) return false;
        }
    }
    return true;
}

bool is_stable(const Graph& g, std::span<const Vertex> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (g.adjacent(vertices[i], vertices[j])) return false;
        }
    }
    return true;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    auto nb = g.neighbors(v);
    VertexSet out(nb.begin(), nb.end());
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to,
                                  const std::vector<char>& allowed) {
    if (from == to) return {from};
    std::vector<Vertex> parent(g.order(), -1);
    std::queue<Vertex> queue;
    parent[from] = from;
    queue.push(from);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(v)) {
            if (parent[w] != -1 || (w != to && !allowed[w])) continue;
            parent[w] = v;
            if (w == to) {
                std::vector<Vertex> path{to};
                for (Vertex x = v; x != from; x = parent[x]) path.push_back(x);
                path.push_back(from);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push(w);
        }
    }
    return {};
}

}  // namespace lexelim
