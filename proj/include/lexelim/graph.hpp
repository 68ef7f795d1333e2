#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lexelim {

using Vertex = int;
/// Sorted list of distinct vertex ids.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;
using Weight = std::int64_t;

enum class ErrorCode {
    InvalidEdge,
    InvalidVertex,
    InvalidOrdering,
    InvalidParameter,
    NotConnected,
    NotLexBFS,
    TheoremViolation,
    LemmaViolation,
    NotAWheel,
    TooLarge,
    Parse,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Graphs with at most this many vertices carry one 64-bit adjacency row per vertex.
inline constexpr std::size_t kSmallGraphLimit = 64;
inline constexpr std::size_t kDefaultMatrixCap = 20000;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored in compressed sorted form. Graphs with at most
/// kSmallGraphLimit vertices also keep bit rows, so adjacency tests are O(1).
/// Larger graphs answer adjacency by binary search until materialize_matrix()
/// builds a dense bit matrix; the matrix is shared between copies and built
/// at most once, so concurrent readers are safe.
class Graph {
public:
    Graph() = default;

    /// Validating constructor; see build_graph().
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t size() const noexcept { return targets_.size() / 2; }
    bool empty() const noexcept { return order() == 0; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    bool contains(Vertex v) const noexcept {
        return v >= 0 && static_cast<std::size_t>(v) < order();
    }

    bool adjacent(Vertex u, Vertex v) const;

    bool is_small() const noexcept { return order() <= kSmallGraphLimit; }
    /// Bit row of v; only valid when is_small().
    std::uint64_t row(Vertex v) const { return rows_[v]; }

    /// Builds the dense adjacency matrix if order() <= cap. Returns whether a
    /// matrix is available afterwards.
    bool materialize_matrix(std::size_t cap = kDefaultMatrixCap) const;
    bool has_matrix() const noexcept;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
    }

private:
    struct DenseMatrix;

    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
    std::vector<std::uint64_t> rows_;
    std::shared_ptr<DenseMatrix> matrix_;
};

/// Graph with a non-negative weight per vertex.
struct WeightedGraph {
    Graph graph;
    std::vector<Weight> weights;

    WeightedGraph() = default;
    WeightedGraph(Graph g, std::vector<Weight> w);

    /// Unit weights.
    explicit WeightedGraph(Graph g);

    Weight weight_of(std::span<const Vertex> vertices) const;
};

/// Builds a simple graph. Rejects self-loops and duplicate edges
/// (InvalidEdge) and ids outside [0, n) (InvalidVertex).
Graph build_graph(std::size_t n, std::span<const Edge> edges);
Graph build_graph(std::size_t n, std::initializer_list<Edge> edges);

/// Sorted copy of vertices; throws InvalidVertex on out-of-range ids or duplicates.
VertexSet make_vertex_set(const Graph& g, std::span<const Vertex> vertices);

struct InducedSubgraph {
    Graph graph;
    /// to_parent[i] is the id in the original graph of local vertex i.
    VertexSet to_parent;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Same, for sorted distinct `vertices`, reusing `scratch` (size g.order(),
/// all -1 on entry and on return) so the cost is the sum of member degrees.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices,
                                 std::vector<Vertex>& scratch);

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// Components of g minus `removed`, reported with original ids.
std::vector<VertexSet> components_without(const Graph& g, std::span<const Vertex> removed);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

Graph complement(const Graph& g);

bool is_clique(const Graph& g, std::span<const Vertex> vertices);
bool is_stable(const Graph& g, std::span<const Vertex> vertices);

/// N[v] as a sorted set.
VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// Shortest path from `from` to `to` using only vertices whose `allowed` flag
/// is set (endpoints are always allowed). Empty when no path exists.
std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to,
                                  const std::vector<char>& allowed);

}  // namespace lexelim
