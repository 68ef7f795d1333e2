#pragma once

#include <optional>

#include "lexelim/certificate.hpp"
#include "lexelim/configurations.hpp"
#include "lexelim/decomposability.hpp"
#include "lexelim/lexbfs.hpp"

namespace lexelim {

/// Earlier neighbors of o[i] (0-based i), sorted.
VertexSet prefix_neighborhood(const Graph& g, const VertexOrdering& o, std::size_t i);

/// First position whose prefix neighborhood contains a member of `family`.
/// Holes use chordal recognition per prefix (O(nm) total); {S2} uses the
/// parent test (O(n + m)); other finite families check the neighborhood
/// description first and enumerate only at the failing position.
/// Throws InvalidOrdering when `o` does not order g.
std::optional<Certificate> check_elimination_ordering(const Graph& g, const VertexOrdering& o,
                                                      const PatternFamily& family);

bool is_elimination_ordering(const Graph& g, const VertexOrdering& o, const PatternFamily& family);

struct EliminationResult {
    VertexOrdering ordering;
    PatternFamily family;
};

/// LexBFS from vertex 0, verified against the family of class c. A
/// certificate proves g is outside c; success does not prove membership.
/// Throws InvalidParameter for classes without a family.
Certified<EliminationResult> elimination_ordering(const Graph& g, ClassId c);

/// The {S2} case with the linear parent test.
Certified<VertexOrdering> perfect_elimination_ordering(const Graph& g);

/// Re-checks that the witness lies in the prefix neighborhood at the claimed
/// position and realizes a member of `family`.
bool verify_elimination_certificate(const Graph& g, const VertexOrdering& o,
                                    const PatternFamily& family, const Certificate& cert);

}  // namespace lexelim
