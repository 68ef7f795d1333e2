#pragma once

#include <vector>

#include "lexelim/certificate.hpp"
#include "lexelim/graph.hpp"
#include "lexelim/lexbfs.hpp"

namespace lexelim {

struct CliqueResult {
    VertexSet clique;
    Weight weight = 0;

    bool operator==(const CliqueResult&) const = default;
};

/// color[v] in 1..count.
struct Coloring {
    std::vector<int> color;
    int count = 0;
};

bool is_proper_coloring(const Graph& g, const Coloring& c);

inline constexpr std::size_t kBruteForceCliqueCap = 20;

/// Exact maximum-weight clique by branch and bound; ties go to the
/// lexicographically smallest vertex set. Throws TooLarge above cap.
CliqueResult max_clique_bruteforce(const WeightedGraph& wg, std::size_t cap = kBruteForceCliqueCap);

/// v plus its earlier neighbors along a perfect elimination ordering, best
/// over v. O(n + m). Non-chordal input yields the elimination certificate.
Certified<CliqueResult> max_clique_chordal(const WeightedGraph& wg);

/// One LexBFS ordering whose prefix neighborhoods must all be chordal; the
/// answer is the best v_i plus a maximum clique of its prefix neighborhood.
/// O(nm). Fails only with a hole inside some prefix neighborhood.
Certified<CliqueResult> max_clique_ehf(const WeightedGraph& wg);

/// Best v plus a maximum clique of N(v), for graphs whose neighborhoods are
/// all chordal. O(nm). Otherwise NeighborhoodNotChordal with a hole in N(v).
Certified<CliqueResult> max_clique_c2(const WeightedGraph& wg);

/// Prefix neighborhoods along LexBFS are complete multipartite: take the
/// heaviest vertex of each part. O(nm).
Certified<CliqueResult> max_clique_c3(const WeightedGraph& wg, bool verify = false);

/// Prefix neighborhoods along LexBFS split into at most two cliques, found by
/// labeling against a first vertex x and its first non-neighbor y. Linear
/// given O(1) adjacency (bit rows or a materialized matrix).
Certified<CliqueResult> max_clique_c4(const WeightedGraph& wg, bool verify = false);

/// Prefix neighborhoods along LexBFS are cliques or stable sets. Linear given
/// O(1) adjacency.
Certified<CliqueResult> max_clique_c6(const WeightedGraph& wg, bool verify = false);

/// Colors in order, each vertex taking the smallest color unused by its
/// colored neighbors.
Coloring greedy_color(const Graph& g, const VertexOrdering& o);

/// Greedy along a perfect elimination ordering; exactly omega colors.
Certified<Coloring> color_chordal(const Graph& g);

/// BFS 2-coloring when bipartite, otherwise greedy along a LexBFS ordering
/// whose prefix neighborhoods are cliques or nonadjacent pairs, giving at
/// most max(3, omega) colors. NotInC7 when some prefix neighborhood is neither.
Certified<Coloring> color_universally_signable(const Graph& g);

enum class VertexTag { Simplicial, Degree2 };

struct TaggedVertex {
    Vertex vertex = -1;
    VertexTag tag = VertexTag::Simplicial;
};

/// Inspects the last vertex of LexBFS from 0. NotFound carries a pattern in
/// its neighborhood that is neither a clique nor a nonadjacent pair.
Certified<TaggedVertex> find_simplicial_or_degree2(const Graph& g);

/// Maximal cliques from the disjoint-clique structure of LexBFS prefix
/// neighborhoods, sorted and deduplicated. NotInC2 carries an induced P3 in
/// a prefix neighborhood.
Certified<std::vector<VertexSet>> enumerate_maximal_cliques_3wf(const Graph& g);

}  // namespace lexelim
