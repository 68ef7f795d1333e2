#pragma once

#include <span>
#include <vector>

#include "lexelim/graph.hpp"

namespace lexelim {

/// A permutation of 0..n-1 together with its inverse.
class VertexOrdering {
public:
    VertexOrdering() = default;

    /// Throws InvalidOrdering unless `order` is a permutation of 0..size-1.
    explicit VertexOrdering(std::vector<Vertex> order);

    std::size_t size() const noexcept { return order_.size(); }
    bool empty() const noexcept { return order_.empty(); }

    /// The i-th vertex (0-based).
    Vertex operator[](std::size_t i) const { return order_[i]; }
    std::size_t position(Vertex v) const { return pos_[v]; }
    bool precedes(Vertex u, Vertex v) const { return pos_[u] < pos_[v]; }
    Vertex last() const { return order_.back(); }

    std::span<const Vertex> vertices() const noexcept { return order_; }
    auto begin() const noexcept { return order_.begin(); }
    auto end() const noexcept { return order_.end(); }

    VertexOrdering reversed() const;

    friend bool operator==(const VertexOrdering& a, const VertexOrdering& b) {
        return a.order_ == b.order_;
    }

private:
    std::vector<Vertex> order_;
    std::vector<std::size_t> pos_;
};

/// Throws InvalidOrdering when `o` is not an ordering of the vertices of `g`.
void require_ordering_of(const Graph& g, const VertexOrdering& o);

/// Lexicographic breadth-first search from `start` by partition refinement,
/// O(n + m). Ties go to the smallest vertex id; when a component is exhausted
/// the search continues from the smallest unvisited id.
VertexOrdering lexbfs(const Graph& g, Vertex start);

/// Exact membership test for LexBFS orderings: for every c < b < a with
/// ca in E and cb not in E there must be d < c with db in E and da not in E.
/// O(n^3 / 64) with bit rows.
bool is_lexbfs_ordering(const Graph& g, const VertexOrdering& o);

struct NeighborEvidence {
    Vertex neighbor = -1;
    /// True when N[neighbor] = N[z]; otherwise `witness` lies in the component.
    bool same_closed_neighborhood = false;
    Vertex witness = -1;
};

/// Certificate that the last vertex z of a LexBFS ordering has a component C
/// of G - N[z] seen by every neighbor of z not closed-twin with z.
struct MoplexWitness {
    bool complete = false;
    Vertex last = -1;
    VertexSet component;
    std::vector<NeighborEvidence> evidence;
};

/// Throws NotConnected for disconnected graphs, NotLexBFS when `o` fails
/// is_lexbfs_ordering, and TheoremViolation if no component qualifies.
MoplexWitness last_vertex_moplex_witness(const Graph& g, const VertexOrdering& o);

/// Independent re-check of every claim in a witness.
bool verify_moplex_witness(const Graph& g, const VertexOrdering& o, const MoplexWitness& w);

/// A path from b to c whose internal vertices avoid N[z], z the last vertex.
/// Requires c < b < a in `o` and ca in E; throws InvalidParameter when those
/// preconditions fail and LemmaViolation when no path exists.
std::vector<Vertex> connecting_path(const Graph& g, const VertexOrdering& o, Vertex a, Vertex b,
                                    Vertex c);

}  // namespace lexelim
