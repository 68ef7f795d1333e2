#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "lexelim/graph.hpp"

namespace lexelim {

enum class CertificateKind {
    Elimination,
    NeighborhoodNotChordal,
    NotCompleteMultipartite,
    NotTwoCliques,
    NotCliqueOrStable,
    NotInC7,
    NotInC2,
    NotFound,
};

std::string_view to_string(CertificateKind kind);

/// Evidence that the input lies outside the class an algorithm targets.
/// `witness` is a vertex set inside the (prefix) neighborhood of `vertex`;
/// for hole witnesses it is given in cyclic order, otherwise sorted.
struct Certificate {
    CertificateKind kind = CertificateKind::Elimination;
    /// 1-based position in the ordering, 0 when not tied to an ordering.
    std::size_t position = 0;
    Vertex vertex = -1;
    std::vector<Vertex> witness;
    /// Name of the pattern realized by `witness`.
    std::string pattern;
};

template <class T>
using Certified = std::variant<T, Certificate>;

template <class T>
bool has_result(const Certified<T>& r) {
    return std::holds_alternative<T>(r);
}

}  // namespace lexelim
