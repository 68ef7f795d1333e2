#include "lexelim/elimination.hpp"

#include <algorithm>

#include "lexelim/chordal.hpp"

namespace lexelim {

std::string_view to_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::Elimination: return "Elimination";
        case CertificateKind::NeighborhoodNotChordal: return "NeighborhoodNotChordal";
        case CertificateKind::NotCompleteMultipartite: return "NotCompleteMultipartite";
        case CertificateKind::NotTwoCliques: return "NotTwoCliques";
        case CertificateKind::NotCliqueOrStable: return "NotCliqueOrStable";
        case CertificateKind::NotInC7: return "NotInC7";
        case CertificateKind::NotInC2: return "NotInC2";
        case CertificateKind::NotFound: return "NotFound";
    }
    return "?";
}

namespace {

std::string small_pattern_name(const Graph& g, const std::vector<Vertex>& w) {
    std::size_t edges = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) edges += g.adjacent(w[i], w[j]) ? 1 : 0;
    }
    if (w.size() == 2 && edges == 0) return "S2";
    if (w.size() == 3) {
        if (edges == 0) return "S3";
        if (edges == 1) return "P3bar";
        if (edges == 2) return "P3";
    }
    return "pattern";
}

VertexSet prefix_neighbors(const Graph& g, const VertexOrdering& o, std::size_t i) {
    const Vertex v = o[i];
    VertexSet out;
    for (Vertex w : g.neighbors(v)) {
        if (o.position(w) < i) out.push_back(w);
    }
    return out;
}

Certificate elimination_certificate(std::size_t i, Vertex v, std::vector<Vertex> w, std::string pattern) {
    return Certificate{CertificateKind::Elimination, i + 1, v, std::move(w), std::move(pattern)};
}

std::optional<Certificate> check_holes(const Graph& g, const VertexOrdering& o, bool long_only) {
    std::vector<Vertex> scratch(g.order(), -1);
    for (std::size_t i = 0; i < o.size(); ++i) {
        const VertexSet pn = prefix_neighbors(g, o, i);
        if (pn.size() < 4) continue;
        const auto sub = induced_subgraph(g, pn, scratch);
        if (is_chordal(sub.graph)) continue;
        std::optional<std::vector<Vertex>> hole;
        if (long_only) {
            hole = first_hole(sub.graph, [](std::size_t len) { return len >= 5; });
            if (!hole) continue;
        } else {
            hole = find_hole(sub.graph);
        }
        std::vector<Vertex> w;
        for (Vertex x : *hole) w.push_back(sub.to_parent[x]);
        return elimination_certificate(i, o[i], std::move(w), long_only ? "LongHole" : "Hole");
    }
    return std::nullopt;
}

}  // namespace

VertexSet prefix_neighborhood(const Graph& g, const VertexOrdering& o, std::size_t i) {
    require_ordering_of(g, o);
    if (i >= o.size()) throw Error(ErrorCode::InvalidParameter, "position out of range");
    return prefix_neighbors(g, o, i);
}

std::optional<Certificate> check_elimination_ordering(const Graph& g, const VertexOrdering& o,
                                                      const PatternFamily& family) {
    require_ordering_of(g, o);
    if (family.empty()) return std::nullopt;
    if (family.infinite()) return check_holes(g, o, family.long_holes());
    if (family.structure_row() == 8) {
        const auto bad = first_nonclique_prefix(g, o);
        if (!bad) return std::nullopt;
        std::vector<Vertex> w{bad->first, bad->second};
        std::sort(w.begin(), w.end());
        return elimination_certificate(bad->index, o[bad->index], std::move(w), "S2");
    }
    for (std::size_t i = 0; i < o.size(); ++i) {
        const VertexSet pn = prefix_neighbors(g, o, i);
        if (pn.size() < 2) continue;
        if (family.structure_row() != 0 && structure_of(g, pn).row(family.structure_row())) continue;
        auto copy = find_pattern_copy(g, pn, family);
        if (!copy) continue;
        std::string name = small_pattern_name(g, *copy);
        return elimination_certificate(i, o[i], std::move(*copy), std::move(name));
    }
    return std::nullopt;
}

bool is_elimination_ordering(const Graph& g, const VertexOrdering& o, const PatternFamily& family) {
    return !check_elimination_ordering(g, o, family).has_value();
}

Certified<EliminationResult> elimination_ordering(const Graph& g, ClassId c) {
    auto family = family_for(c);
    if (!family) {
        throw Error(ErrorCode::InvalidParameter,
                    std::string("no elimination family for class ") + std::string(to_string(c)));
    }
    VertexOrdering o = g.empty() ? VertexOrdering{} : lexbfs(g, 0);
    if (auto cert = check_elimination_ordering(g, o, *family)) return *cert;
    return EliminationResult{std::move(o), std::move(*family)};
}

Certified<VertexOrdering> perfect_elimination_ordering(const Graph& g) {
    VertexOrdering o = g.empty() ? VertexOrdering{} : lexbfs(g, 0);
    if (auto cert = check_elimination_ordering(g, o, PatternFamily::named(NamedFamily::S2))) return *cert;
    return o;
}

bool verify_elimination_certificate(const Graph& g, const VertexOrdering& o,
                                    const PatternFamily& family, const Certificate& cert) {
    if (o.size() != g.order() || cert.position < 1 || cert.position > o.size()) return false;
    const std::size_t i = cert.position - 1;
    if (o[i] != cert.vertex) return false;
    const VertexSet pn = prefix_neighbors(g, o, i);
    for (Vertex w : cert.witness) {
        if (!std::binary_search(pn.begin(), pn.end(), w)) return false;
    }
    if (family.infinite()) {
        if (!is_hole(g, cert.witness)) return false;
        return !family.long_holes() || cert.witness.size() >= 5;
    }
    VertexSet sorted(cert.witness.begin(), cert.witness.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    const auto copies = pattern_copies(g, sorted, family);
    return std::find(copies.begin(), copies.end(), sorted) != copies.end();
}

}  // namespace lexelim
