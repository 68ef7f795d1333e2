#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lexelim/configurations.hpp"
#include "lexelim/graph.hpp"

namespace lexelim {

enum class NamedFamily {
    S2,
    S3,
    P3,
    P3bar,
    S3P3,
    S3P3bar,
    P3P3bar,
    S3P3P3bar,
    Holes,
    LongHoles,
};

/// A set of forbidden patterns: either explicit graphs on at most four
/// vertices or one of the two infinite hole families.
class PatternFamily {
public:
    PatternFamily() = default;

    static PatternFamily named(NamedFamily family);
    /// Throws InvalidParameter for patterns with more than four vertices.
    static PatternFamily custom(std::vector<Graph> patterns, std::string name = "custom");

    bool holes() const noexcept { return infinite_ == Infinite::Holes; }
    bool long_holes() const noexcept { return infinite_ == Infinite::LongHoles; }
    bool infinite() const noexcept { return infinite_ != Infinite::None; }
    bool empty() const noexcept { return !infinite() && patterns_.empty(); }

    const std::vector<Graph>& patterns() const noexcept { return patterns_; }
    const std::string& name() const noexcept { return name_; }

    /// Whether an induced subgraph on `size` vertices with the given pair mask
    /// (bit index of pair (i, j), i < j, in the order (0,1),(0,2),(0,3),(1,2),
    /// (1,3),(2,3)) is isomorphic to a member.
    bool matches(std::size_t size, unsigned pair_mask) const;

    /// Row (1..8) of NeighborhoodStructure equivalent to F-freeness for the
    /// named three-vertex families and {S2}; 0 otherwise.
    int structure_row() const noexcept { return structure_row_; }

    /// Sizes of the finite members, ascending.
    std::vector<std::size_t> sizes() const;

private:
    enum class Infinite { None, Holes, LongHoles };

    void index_patterns();

    std::vector<Graph> patterns_;
    std::string name_;
    Infinite infinite_ = Infinite::None;
    int structure_row_ = 0;
    // Accepted pair masks per pattern size.
    std::array<std::uint64_t, 5> accepted_{};
};

/// Neighborhood patterns excluded by the elimination orderings of class c:
/// C1..C8 map to their three-vertex (or S2) families and the two
/// hole-decomposable classes to Holes and LongHoles. nullopt otherwise.
std::optional<PatternFamily> family_for(ClassId c);

/// First induced copy (lexicographic by sorted vertex list) of a family member
/// inside g[within]; `within` sorted. Hole families use chordless-cycle
/// enumeration and are exponential in the worst case.
std::optional<VertexSet> find_pattern_copy(const Graph& g, std::span<const Vertex> within,
                                           const PatternFamily& family);

/// Every induced copy inside g[within], in lexicographic order.
std::vector<VertexSet> pattern_copies(const Graph& g, std::span<const Vertex> within,
                                      const PatternFamily& family);

/// Witness copy when g is not F-free. Holes is decided by chordal recognition
/// at any size; LongHoles throws TooLarge above cap.
std::optional<VertexSet> find_F_copy(const Graph& g, const PatternFamily& family,
                                     std::size_t cap = kDefaultBruteForceCap);

bool is_F_free(const Graph& g, const PatternFamily& family, std::size_t cap = kDefaultBruteForceCap);

/// The eight neighborhood descriptions, evaluated on g[N(v)].
struct NeighborhoodStructure {
    bool no_stable_three = false;         // S3-free
    bool union_of_cliques = false;        // P3-free
    bool complete_multipartite = false;   // P3bar-free
    bool at_most_two_cliques = false;     // {S3, P3}-free
    bool multipartite_small_parts = false;  // {S3, P3bar}-free
    bool clique_or_stable = false;        // {P3, P3bar}-free
    bool clique_or_nonadjacent_pair = false;  // {S3, P3, P3bar}-free
    bool clique = false;                  // S2-free

    /// Description for class row 1..8.
    bool row(int i) const;
};

NeighborhoodStructure neighborhood_structure(const Graph& g, Vertex v);

/// Same descriptions for g[within].
NeighborhoodStructure structure_of(const Graph& g, std::span<const Vertex> within);

struct DecomposabilityCounterexample {
    Vertex vertex = -1;
    VertexSet copy;
    VertexSet component;
    /// For each member of `copy` with a non-neighbor in `copy`: a neighbor in `component`.
    std::vector<std::pair<Vertex, Vertex>> evidence;
};

/// nullopt when g is locally F-decomposable; otherwise the lexicographically
/// smallest (vertex, copy, component) violation. Hole families throw TooLarge
/// above cap.
std::optional<DecomposabilityCounterexample> find_decomposability_violation(
    const Graph& g, const PatternFamily& family, std::size_t cap = kDefaultBruteForceCap);

bool is_locally_F_decomposable(const Graph& g, const PatternFamily& family,
                               std::size_t cap = kDefaultBruteForceCap);

bool verify_counterexample(const Graph& g, const PatternFamily& family,
                           const DecomposabilityCounterexample& ce);

}  // namespace lexelim
