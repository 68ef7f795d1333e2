#include "lexelim/decomposability.hpp"

#include <algorithm>
#include <numeric>

#include "lexelim/chordal.hpp"

namespace lexelim {

namespace {

constexpr int kPairIndex[4][4] = {
    {-1, 0, 1, 2},
    {0, -1, 3, 4},
    {1, 3, -1, 5},
    {2, 4, 5, -1},
};

Graph pattern_s2() { return build_graph(2, {}); }
Graph pattern_s3() { return build_graph(3, {}); }
Graph pattern_p3() { return build_graph(3, {{0, 1}, {1, 2}}); }
Graph pattern_p3bar() { return build_graph(3, {{0, 1}}); }

unsigned pair_mask_of(const Graph& g, std::span<const Vertex> vertices) {
    unsigned mask = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (g.adjacent(vertices[i], vertices[j])) mask |= 1U << kPairIndex[i][j];
        }
    }
    return mask;
}

}  // namespace

PatternFamily PatternFamily::named(NamedFamily family) {
    PatternFamily f;
    switch (family) {
        case NamedFamily::S2:
            f.structure_row_ = 8;
            f.patterns_ = {pattern_s2()};
            f.name_ = "{S2}";
            break;
        case NamedFamily::S3:
            f.structure_row_ = 1;
            f.patterns_ = {pattern_s3()};
            f.name_ = "{S3}";
            break;
        case NamedFamily::P3:
            f.structure_row_ = 2;
            f.patterns_ = {pattern_p3()};
            f.name_ = "{P3}";
            break;
        case NamedFamily::P3bar:
            f.structure_row_ = 3;
            f.patterns_ = {pattern_p3bar()};
            f.name_ = "{P3bar}";
            break;
        case NamedFamily::S3P3:
            f.structure_row_ = 4;
            f.patterns_ = {pattern_s3(), pattern_p3()};
            f.name_ = "{S3,P3}";
            break;
        case NamedFamily::S3P3bar:
            f.structure_row_ = 5;
            f.patterns_ = {pattern_s3(), pattern_p3bar()};
            f.name_ = "{S3,P3bar}";
            break;
        case NamedFamily::P3P3bar:
            f.structure_row_ = 6;
            f.patterns_ = {pattern_p3(), pattern_p3bar()};
            f.name_ = "{P3,P3bar}";
            break;
        case NamedFamily::S3P3P3bar:
            f.structure_row_ = 7;
            f.patterns_ = {pattern_s3(), pattern_p3(), pattern_p3bar()};
            f.name_ = "{S3,P3,P3bar}";
            break;
        case NamedFamily::Holes:
            f.infinite_ = Infinite::Holes;
            f.name_ = "Holes";
            break;
        case NamedFamily::LongHoles:
            f.infinite_ = Infinite::LongHoles;
            f.name_ = "LongHoles";
            break;
    }
    f.index_patterns();
    return f;
}

PatternFamily PatternFamily::custom(std::vector<Graph> patterns, std::string name) {
    for (const auto& p : patterns) {
        if (p.order() > 4) {
            throw Error(ErrorCode::InvalidParameter, "patterns are limited to four vertices");
        }
    }
    PatternFamily f;
    f.patterns_ = std::move(patterns);
    f.name_ = std::move(name);
    f.index_patterns();
    return f;
}

void PatternFamily::index_patterns() {
    accepted_.fill(0);
    for (const auto& p : patterns_) {
        const std::size_t k = p.order();
        std::vector<Vertex> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            unsigned mask = 0;
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = i + 1; j < k; ++j) {
                    if (p.adjacent(perm[i], perm[j])) mask |= 1U << kPairIndex[i][j];
                }
            }
            accepted_[k] |= std::uint64_t{1} << mask;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

bool PatternFamily::matches(std::size_t size, unsigned pair_mask) const {
    return size < accepted_.size() && ((accepted_[size] >> pair_mask) & 1U);
}

std::vector<std::size_t> PatternFamily::sizes() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < accepted_.size(); ++k) {
        if (accepted_[k]) out.push_back(k);
    }
    return out;
}

std::optional<PatternFamily> family_for(ClassId c) {
    switch (c) {
        case ClassId::C1: return PatternFamily::named(NamedFamily::S3);
        case ClassId::C2: return PatternFamily::named(NamedFamily::P3);
        case ClassId::C3: return PatternFamily::named(NamedFamily::P3bar);
        case ClassId::C4: return PatternFamily::named(NamedFamily::S3P3);
        case ClassId::C5: return PatternFamily::named(NamedFamily::S3P3bar);
        case ClassId::C6: return PatternFamily::named(NamedFamily::P3P3bar);
        case ClassId::C7: return PatternFamily::named(NamedFamily::S3P3P3bar);
        case ClassId::C8: return PatternFamily::named(NamedFamily::S2);
        case ClassId::FourHoleFreeOddSignable: return PatternFamily::named(NamedFamily::Holes);
        case ClassId::SquareThetaFreeEvenSignable: return PatternFamily::named(NamedFamily::LongHoles);
        default: return std::nullopt;
    }
}

namespace {

// Lexicographic DFS over subsets of `within` up to the largest pattern size.
template <class Visit>
bool visit_subsets(const Graph& g, std::span<const Vertex> within, const PatternFamily& family,
                   std::vector<Vertex>& chosen, std::size_t next, std::size_t max_size, Visit& visit) {
    for (std::size_t i = next; i < within.size(); ++i) {
        chosen.push_back(within[i]);
        if (family.matches(chosen.size(), pair_mask_of(g, chosen))) {
            if (!visit(chosen)) return false;
        }
        if (chosen.size() < max_size &&
            !visit_subsets(g, within, family, chosen, i + 1, max_size, visit)) {
            return false;
        }
        chosen.pop_back();
    }
    return true;
}

std::vector<VertexSet> hole_copies(const Graph& g, std::span<const Vertex> within, bool long_only) {
    auto sub = induced_subgraph(g, within);
    std::vector<VertexSet> out;
    for_each_hole(sub.graph, [&](const std::vector<Vertex>& cycle) {
        if (long_only && cycle.size() < 5) return true;
        VertexSet s;
        for (Vertex x : cycle) s.push_back(sub.to_parent[x]);
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<VertexSet> pattern_copies(const Graph& g, std::span<const Vertex> within,
                                      const PatternFamily& family) {
    if (family.infinite()) return hole_copies(g, within, family.long_holes());
    std::vector<VertexSet> out;
    const auto sizes = family.sizes();
    if (sizes.empty()) return out;
    std::vector<Vertex> chosen;
    auto visit = [&](const std::vector<Vertex>& s) {
        out.push_back(s);
        return true;
    };
    visit_subsets(g, within, family, chosen, 0, sizes.back(), visit);
    return out;
}

std::optional<VertexSet> find_pattern_copy(const Graph& g, std::span<const Vertex> within,
                                           const PatternFamily& family) {
    if (family.infinite()) {
        auto copies = hole_copies(g, within, family.long_holes());
        if (copies.empty()) return std::nullopt;
        return copies.front();
    }
    const auto sizes = family.sizes();
    if (sizes.empty()) return std::nullopt;
    std::optional<VertexSet> found;
    std::vector<Vertex> chosen;
    auto visit = [&](const std::vector<Vertex>& s) {
        found = s;
        return false;
    };
    visit_subsets(g, within, family, chosen, 0, sizes.back(), visit);
    return found;
}

std::optional<VertexSet> find_F_copy(const Graph& g, const PatternFamily& family, std::size_t cap) {
    if (family.holes()) {
        auto hole = find_hole(g);
        if (!hole) return std::nullopt;
        std::sort(hole->begin(), hole->end());
        return *hole;
    }
    if (family.long_holes() && g.order() > cap) {
        throw Error(ErrorCode::TooLarge, "long-hole search is limited to " + std::to_string(cap) + " vertices");
    }
    std::vector<Vertex> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return find_pattern_copy(g, all, family);
}

bool is_F_free(const Graph& g, const PatternFamily& family, std::size_t cap) {
    return !find_F_copy(g, family, cap).has_value();
}

bool NeighborhoodStructure::row(int i) const {
    switch (i) {
        case 1: return no_stable_three;
        case 2: return union_of_cliques;
        case 3: return complete_multipartite;
        case 4: return at_most_two_cliques;
        case 5: return multipartite_small_parts;
        case 6: return clique_or_stable;
        case 7: return clique_or_nonadjacent_pair;
        case 8: return clique;
        default: throw Error(ErrorCode::InvalidParameter, "row must be in 1..8");
    }
}

namespace {

// Components of the complement of h by non-neighbor merging: each scan of the
// unvisited list either removes a vertex or is charged to an edge of h.
std::vector<VertexSet> complement_components(const Graph& h) {
    const std::size_t d = h.order();
    std::vector<Vertex> unvisited(d);
    std::iota(unvisited.begin(), unvisited.end(), 0);
    std::vector<char> mark(d, 0);
    std::vector<VertexSet> parts;
    std::vector<Vertex> queue, keep;
    while (!unvisited.empty()) {
        VertexSet part;
        queue.assign(1, unvisited.front());
        unvisited.erase(unvisited.begin());
        while (!queue.empty()) {
            Vertex u = queue.back();
            queue.pop_back();
            part.push_back(u);
            for (Vertex w : h.neighbors(u)) mark[w] = 1;
            keep.clear();
            for (Vertex x : unvisited) {
                if (mark[x]) keep.push_back(x); else queue.push_back(x);
            }
            unvisited.swap(keep);
            for (Vertex w : h.neighbors(u)) mark[w] = 0;
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

bool has_stable_three(const Graph& h) {
    const std::size_t d = h.order();
    if (d < 3) return false;
    if (h.is_small()) {
        const std::uint64_t all = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
        for (std::size_t u = 0; u < d; ++u) {
            const std::uint64_t non_u = all & ~h.row(static_cast<Vertex>(u)) & ~((std::uint64_t{2} << u) - 1);
            for (std::uint64_t m = non_u; m; m &= m - 1) {
                const int w = std::countr_zero(m);
                if (non_u & ~h.row(w) & ~((std::uint64_t{2} << w) - 1)) return true;
            }
        }
        return false;
    }
    for (std::size_t u = 0; u < d; ++u) {
        for (std::size_t w = u + 1; w < d; ++w) {
            if (h.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(w))) continue;
            for (std::size_t x = w + 1; x < d; ++x) {
                if (!h.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(x)) &&
                    !h.adjacent(static_cast<Vertex>(w), static_cast<Vertex>(x))) {
                    return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

NeighborhoodStructure structure_of(const Graph& g, std::span<const Vertex> within) {
    const Graph h = induced_subgraph(g, within).graph;
    const std::size_t d = h.order();
    NeighborhoodStructure s;
    s.clique = is_complete(h);
    const bool edgeless = h.size() == 0;

    const auto comps = components(h);
    s.union_of_cliques = true;
    for (const auto& c : comps) {
        std::size_t deg_sum = 0;
        for (Vertex x : c) deg_sum += h.degree(x);
        if (deg_sum != c.size() * (c.size() - 1)) {
            s.union_of_cliques = false;
            break;
        }
    }

    const auto parts = complement_components(h);
    std::vector<int> part_of(d, -1);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (Vertex x : parts[i]) part_of[x] = static_cast<int>(i);
    }
    s.complete_multipartite = true;
    for (std::size_t x = 0; x < d && s.complete_multipartite; ++x) {
        for (Vertex y : h.neighbors(static_cast<Vertex>(x))) {
            if (part_of[y] == part_of[x]) {
                s.complete_multipartite = false;
                break;
            }
        }
    }
    bool small_parts = true;
    for (const auto& p : parts) small_parts = small_parts && p.size() <= 2;

    s.no_stable_three = !has_stable_three(h);
    s.at_most_two_cliques = s.union_of_cliques && comps.size() <= 2;
    s.multipartite_small_parts = s.complete_multipartite && small_parts;
    s.clique_or_stable = s.clique || edgeless;
    s.clique_or_nonadjacent_pair = s.clique || (d == 2 && edgeless);
    return s;
}

NeighborhoodStructure neighborhood_structure(const Graph& g, Vertex v) {
    if (!g.contains(v)) throw Error(ErrorCode::InvalidVertex, "vertex out of range");
    return structure_of(g, g.neighbors(v));
}

std::optional<DecomposabilityCounterexample> find_decomposability_violation(
    const Graph& g, const PatternFamily& family, std::size_t cap) {
    if (family.infinite() && g.order() > cap) {
        throw Error(ErrorCode::TooLarge, "hole-family decomposability is limited to " +
                                             std::to_string(cap) + " vertices");
    }
    const std::size_t n = g.order();
    std::vector<int> block_of(n);
    for (std::size_t vi = 0; vi < n; ++vi) {
        const Vertex v = static_cast<Vertex>(vi);
        auto nb = g.neighbors(v);
        if (nb.size() < 2) continue;
        const auto copies = pattern_copies(g, nb, family);
        if (copies.empty()) continue;
        const auto blocks = components_without(g, closed_neighborhood(g, v));
        std::fill(block_of.begin(), block_of.end(), -1);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            for (Vertex u : blocks[b]) block_of[u] = static_cast<int>(b);
        }
        for (const auto& copy : copies) {
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                DecomposabilityCounterexample ce{v, copy, blocks[b], {}};
                bool rescued = false;
                for (Vertex y : copy) {
                    bool has_non_neighbor = false;
                    for (Vertex x : copy) {
                        if (x != y && !g.adjacent(x, y)) {
                            has_non_neighbor = true;
                            break;
                        }
                    }
                    if (!has_non_neighbor) continue;
                    Vertex seen = -1;
                    for (Vertex z : g.neighbors(y)) {
                        if (block_of[z] == static_cast<int>(b)) {
                            seen = z;
                            break;
                        }
                    }
                    if (seen < 0) {
                        rescued = true;
                        break;
                    }
                    ce.evidence.emplace_back(y, seen);
                }
                if (!rescued) return ce;
            }
        }
    }
    return std::nullopt;
}

bool is_locally_F_decomposable(const Graph& g, const PatternFamily& family, std::size_t cap) {
    return !find_decomposability_violation(g, family, cap).has_value();
}

bool verify_counterexample(const Graph& g, const PatternFamily& family,
                           const DecomposabilityCounterexample& ce) {
    if (!g.contains(ce.vertex)) return false;
    for (Vertex y : ce.copy) {
        if (!g.contains(y) || !g.adjacent(ce.vertex, y)) return false;
    }
    if (family.infinite()) {
        auto sub = induced_subgraph(g, ce.copy);
        const KindSet kinds = classify_configuration(sub.graph);
        if (!kinds.contains(family.long_holes() ? ConfigKind::LongHole : ConfigKind::Hole)) return false;
    } else if (!family.matches(ce.copy.size(), pair_mask_of(g, ce.copy))) {
        return false;
    }
    const auto blocks = components_without(g, closed_neighborhood(g, ce.vertex));
    if (std::find(blocks.begin(), blocks.end(), ce.component) == blocks.end()) return false;
    std::size_t needed = 0;
    for (Vertex y : ce.copy) {
        bool has_non_neighbor = false;
        for (Vertex x : ce.copy) has_non_neighbor = has_non_neighbor || (x != y && !g.adjacent(x, y));
        if (!has_non_neighbor) continue;
        ++needed;
        auto it = std::find_if(ce.evidence.begin(), ce.evidence.end(),
                               [y](const auto& e) { return e.first == y; });
        if (it == ce.evidence.end()) return false;
        if (!std::binary_search(ce.component.begin(), ce.component.end(), it->second)) return false;
        if (!g.adjacent(y, it->second)) return false;
    }
    return needed == ce.evidence.size();
}

}  // namespace lexelim
