#pragma once

#include <optional>
#include <vector>

#include "lexelim/graph.hpp"
#include "lexelim/lexbfs.hpp"

namespace lexelim {

/// First position (0-based) whose earlier neighborhood is not a clique,
/// together with two nonadjacent earlier neighbors. Uses the parent test:
/// each vertex's earlier neighbors other than the latest one must be earlier
/// neighbors of that latest one. O(n + m).
struct CliquePrefixViolation {
    std::size_t index = 0;
    Vertex first = -1;
    Vertex second = -1;
};

std::optional<CliquePrefixViolation> first_nonclique_prefix(const Graph& g, const VertexOrdering& o);

/// LexBFS from vertex 0 plus the parent test.
bool is_chordal(const Graph& g);

/// Some hole of g, as a cyclic vertex sequence, or nullopt when g is chordal.
/// Looks for a vertex v whose neighbors attached to one component C of
/// G - N[v] are not pairwise adjacent and closes a shortest path through C;
/// O(n (n + m)) in the worst case.
std::optional<std::vector<Vertex>> find_hole(const Graph& g);

/// True when `cycle` (cyclic order) is a chordless cycle of length >= 4 in g.
bool is_hole(const Graph& g, const std::vector<Vertex>& cycle);

}  // namespace lexelim
