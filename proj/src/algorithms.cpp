#include "lexelim/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <span>

#include "lexelim/chordal.hpp"
#include "lexelim/decomposability.hpp"
#include "lexelim/elimination.hpp"

namespace lexelim {

namespace {

VertexSet earlier_neighbors(const Graph& g, const VertexOrdering& o, std::size_t i) {
    VertexSet out;
    for (Vertex w : g.neighbors(o[i])) {
        if (o.position(w) < i) out.push_back(w);
    }
    return out;
}

void earlier_neighbors(const Graph& g, const VertexOrdering& o, std::size_t i, VertexSet& out) {
    out.clear();
    for (Vertex w : g.neighbors(o[i])) {
        if (o.position(w) < i) out.push_back(w);
    }
}

VertexSet with_vertex(VertexSet s, Vertex v) {
    s.insert(std::upper_bound(s.begin(), s.end(), v), v);
    return s;
}

// Keeps the heaviest candidate, ties to the lexicographically smaller set.
class BestClique {
public:
    explicit BestClique(const std::vector<Weight>& weights) : weights_(weights) {}

    void offer(VertexSet clique) {
        Weight w = 0;
        for (Vertex v : clique) w += weights_[v];
        if (!have_ || w > best_.weight || (w == best_.weight && clique < best_.clique)) {
            best_.clique = std::move(clique);
            best_.weight = w;
            have_ = true;
        }
    }

    CliqueResult result() && { return std::move(best_); }

private:
    const std::vector<Weight>& weights_;
    CliqueResult best_;
    bool have_ = false;
};

// Candidates that are cliques only for class members: keep them all and take
// the best one that really is a clique. Singletons are always valid, so a
// nonempty graph always gets an answer.
class VerifiedCandidates {
public:
    VerifiedCandidates(const Graph& g, const std::vector<Weight>& weights)
        : g_(g), weights_(weights), mark_(g.order(), 0) {
        // At most two candidates per vertex, holding at most 2n + m ids in total.
        pool_.reserve(2 * g.order());
        flat_.reserve(2 * g.order() + g.size());
    }

    /// Offers `sorted` with v inserted at its sorted position.
    void offer(std::span<const Vertex> sorted, Vertex v) {
        Entry e{0, flat_.size(), sorted.size() + 1};
        bool placed = false;
        for (Vertex u : sorted) {
            if (!placed && v < u) {
                flat_.push_back(v);
                placed = true;
            }
            flat_.push_back(u);
        }
        if (!placed) flat_.push_back(v);
        for (std::size_t k = e.begin; k < flat_.size(); ++k) e.weight += weights_[flat_[k]];
        pool_.push_back(e);
    }

    CliqueResult best() {
        const auto better = [this](const Entry& a, const Entry& b) {
            if (a.weight != b.weight) return a.weight > b.weight;
            const auto x = members(a), y = members(b);
            return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
        };
        if (pool_.empty()) return {};
        // On class members every candidate is a clique, so a linear scan
        // settles it; sorting is only needed when the top candidate fails.
        auto top = std::min_element(pool_.begin(), pool_.end(), better);
        if (!is_clique_marked(members(*top))) {
            std::sort(pool_.begin(), pool_.end(), better);
            top = std::find_if(pool_.begin(), pool_.end(), [this](const Entry& e) {
                return is_clique_marked(members(e));
            });
            if (top == pool_.end()) return {};
        }
        const auto m = members(*top);
        return CliqueResult{VertexSet(m.begin(), m.end()), top->weight};
    }

private:
    struct Entry {
        Weight weight;
        std::size_t begin;
        std::size_t size;
    };

    std::span<const Vertex> members(const Entry& e) const { return {flat_.data() + e.begin, e.size}; }

    bool is_clique_marked(std::span<const Vertex> k) {
        for (Vertex v : k) mark_[v] = 1;
        bool ok = true;
        for (Vertex v : k) {
            std::size_t inside = 0;
            for (Vertex w : g_.neighbors(v)) inside += mark_[w];
            if (inside + 1 != k.size()) {
                ok = false;
                break;
            }
        }
        for (Vertex v : k) mark_[v] = 0;
        return ok;
    }

    const Graph& g_;
    const std::vector<Weight>& weights_;
    std::vector<char> mark_;
    std::vector<Vertex> flat_;
    std::vector<Entry> pool_;
};

// Best v plus earlier neighbors along an ordering with clique prefixes.
CliqueResult clique_along_peo(const Graph& g, const std::vector<Weight>& weights, const VertexOrdering& o) {
    BestClique best(weights);
    for (std::size_t i = 0; i < o.size(); ++i) best.offer(with_vertex(earlier_neighbors(g, o, i), o[i]));
    return std::move(best).result();
}

std::vector<Weight> local_weights(const std::vector<Weight>& weights, const VertexSet& to_parent) {
    std::vector<Weight> out;
    out.reserve(to_parent.size());
    for (Vertex v : to_parent) out.push_back(weights[v]);
    return out;
}

std::vector<Vertex> lift(const VertexSet& to_parent, std::span<const Vertex> local) {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex x : local) out.push_back(to_parent[x]);
    return out;
}

// Maximum clique of the chordal graph g[within] (mapped to parent ids), or
// a hole of g[within] in cyclic order.
std::variant<CliqueResult, std::vector<Vertex>> chordal_clique_within(
    const WeightedGraph& wg, const VertexSet& within, std::vector<Vertex>& scratch) {
    if (within.empty()) return CliqueResult{};
    const auto sub = induced_subgraph(wg.graph, within, scratch);
    const VertexOrdering o = lexbfs(sub.graph, 0);
    if (first_nonclique_prefix(sub.graph, o)) return lift(sub.to_parent, *find_hole(sub.graph));
    CliqueResult local = clique_along_peo(sub.graph, local_weights(wg.weights, sub.to_parent), o);
    VertexSet lifted = lift(sub.to_parent, local.clique);
    return CliqueResult{std::move(lifted), local.weight};
}

Certificate make_certificate(CertificateKind kind, std::size_t position, Vertex v,
                             std::vector<Vertex> witness, std::string pattern) {
    return Certificate{kind, position, v, std::move(witness), std::move(pattern)};
}

std::string pattern_name(const Graph& g, const VertexSet& w) {
    std::size_t edges = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) edges += g.adjacent(w[i], w[j]) ? 1 : 0;
    }
    if (w.size() == 2) return "S2";
    return edges == 0 ? "S3" : edges == 1 ? "P3bar" : "P3";
}

Certificate pattern_certificate(const Graph& g, CertificateKind kind, std::size_t position, Vertex v,
                                const VertexSet& within, NamedFamily family) {
    auto copy = find_pattern_copy(g, within, PatternFamily::named(family));
    VertexSet w = copy ? *copy : VertexSet{};
    std::string name = copy ? pattern_name(g, w) : "";
    return make_certificate(kind, position, v, std::move(w), std::move(name));
}

VertexOrdering sweep(const Graph& g) { return g.empty() ? VertexOrdering{} : lexbfs(g, 0); }

std::optional<Certificate> verify_family(const Graph& g, const VertexOrdering& o, NamedFamily family) {
    return check_elimination_ordering(g, o, PatternFamily::named(family));
}

}  // namespace

bool is_proper_coloring(const Graph& g, const Coloring& c) {
    if (c.color.size() != g.order()) return false;
    for (int x : c.color) {
        if (x < 1 || x > c.count) return false;
    }
    for (const auto& [u, v] : g.edges()) {
        if (c.color[u] == c.color[v]) return false;
    }
    return true;
}

CliqueResult max_clique_bruteforce(const WeightedGraph& wg, std::size_t cap) {
    const Graph& g = wg.graph;
    const std::size_t n = g.order();
    if (n > cap || n >= kSmallGraphLimit) {
        throw Error(ErrorCode::TooLarge, "brute-force clique is limited to " + std::to_string(cap) + " vertices");
    }
    if (n == 0) return {};
    std::uint64_t best_set = 0;
    Weight best = -1;
    auto weight_of_mask = [&](std::uint64_t m) {
        Weight w = 0;
        for (; m; m &= m - 1) w += wg.weights[std::countr_zero(m)];
        return w;
    };
    // Depth-first in lexicographic order of sorted vertex lists, so the first
    // set reaching a weight is the lexicographically smallest one.
    auto dfs = [&](auto& self, std::uint64_t current, Weight w, std::uint64_t candidates) -> void {
        for (std::uint64_t m = candidates; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            const std::uint64_t next = current | (std::uint64_t{1} << v);
            const Weight nw = w + wg.weights[v];
            if (nw > best) {
                best = nw;
                best_set = next;
            }
            const std::uint64_t later = candidates & g.row(v) & ~((std::uint64_t{2} << v) - 1);
            if (later && nw + weight_of_mask(later) > best) self(self, next, nw, later);
        }
    };
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    dfs(dfs, 0, 0, all);
    CliqueResult r;
    for (std::uint64_t m = best_set; m; m &= m - 1) r.clique.push_back(std::countr_zero(m));
    r.weight = best;
    return r;
}

Certified<CliqueResult> max_clique_chordal(const WeightedGraph& wg) {
    const VertexOrdering o = sweep(wg.graph);
    if (auto cert = verify_family(wg.graph, o, NamedFamily::S2)) return *cert;
    return clique_along_peo(wg.graph, wg.weights, o);
}

Certified<CliqueResult> max_clique_ehf(const WeightedGraph& wg) {
    const Graph& g = wg.graph;
    const VertexOrdering o = sweep(g);
    std::vector<Vertex> scratch(g.order(), -1);
    BestClique best(wg.weights);
    for (std::size_t i = 0; i < o.size(); ++i) {
        const VertexSet pn = earlier_neighbors(g, o, i);
        auto inner = chordal_clique_within(wg, pn, scratch);
        if (auto* hole = std::get_if<std::vector<Vertex>>(&inner)) {
            return make_certificate(CertificateKind::Elimination, i + 1, o[i], std::move(*hole), "Hole");
        }
        best.offer(with_vertex(std::get<CliqueResult>(inner).clique, o[i]));
    }
    return std::move(best).result();
}

Certified<CliqueResult> max_clique_c2(const WeightedGraph& wg) {
    const Graph& g = wg.graph;
    std::vector<Vertex> scratch(g.order(), -1);
    BestClique best(wg.weights);
    for (std::size_t vi = 0; vi < g.order(); ++vi) {
        const Vertex v = static_cast<Vertex>(vi);
        const VertexSet nb(g.neighbors(v).begin(), g.neighbors(v).end());
        auto inner = chordal_clique_within(wg, nb, scratch);
        if (auto* hole = std::get_if<std::vector<Vertex>>(&inner)) {
            return make_certificate(CertificateKind::NeighborhoodNotChordal, 0, v, std::move(*hole), "Hole");
        }
        best.offer(with_vertex(std::get<CliqueResult>(inner).clique, v));
    }
    return std::move(best).result();
}

Certified<CliqueResult> max_clique_c3(const WeightedGraph& wg, bool verify) {
    const Graph& g = wg.graph;
    const std::size_t n = g.order();
    const VertexOrdering o = sweep(g);
    if (verify) {
        if (auto cert = verify_family(g, o, NamedFamily::P3bar)) return *cert;
    }
    BestClique best(wg.weights);
    std::vector<char> mark(n, 0);
    std::vector<int> part_of(n, -1);
    std::vector<Vertex> unvisited, keep, queue;
    for (std::size_t i = 0; i < n; ++i) {
        const VertexSet pn = earlier_neighbors(g, o, i);
        // Parts are the components of the complement of g[pn], grown by
        // repeatedly pulling in every unvisited non-neighbor.
        std::vector<VertexSet> parts;
        unvisited = pn;
        while (!unvisited.empty()) {
            VertexSet part;
            queue.assign(1, unvisited.front());
            unvisited.erase(unvisited.begin());
            while (!queue.empty()) {
                const Vertex u = queue.back();
                queue.pop_back();
                part.push_back(u);
                for (Vertex w : g.neighbors(u)) mark[w] = 1;
                keep.clear();
                for (Vertex x : unvisited) {
                    if (mark[x]) keep.push_back(x); else queue.push_back(x);
                }
                unvisited.swap(keep);
                for (Vertex w : g.neighbors(u)) mark[w] = 0;
            }
            parts.push_back(std::move(part));
        }
        for (std::size_t p = 0; p < parts.size(); ++p) {
            for (Vertex u : parts[p]) part_of[u] = static_cast<int>(p);
        }
        bool multipartite = true;
        for (Vertex u : pn) {
            for (Vertex w : g.neighbors(u)) {
                if (part_of[w] == part_of[u]) multipartite = false;
            }
        }
        for (Vertex u : pn) part_of[u] = -1;
        if (!multipartite) {
            return pattern_certificate(g, CertificateKind::NotCompleteMultipartite, i + 1, o[i], pn,
                                       NamedFamily::P3bar);
        }
        VertexSet clique{o[i]};
        for (const auto& part : parts) {
            Vertex pick = part.front();
            for (Vertex u : part) {
                if (wg.weights[u] > wg.weights[pick] || (wg.weights[u] == wg.weights[pick] && u < pick)) pick = u;
            }
            clique.push_back(pick);
        }
        std::sort(clique.begin(), clique.end());
        best.offer(std::move(clique));
    }
    return std::move(best).result();
}

Certified<CliqueResult> max_clique_c4(const WeightedGraph& wg, bool verify) {
    const Graph& g = wg.graph;
    const VertexOrdering o = sweep(g);
    if (verify) {
        if (auto cert = verify_family(g, o, NamedFamily::S3P3)) return *cert;
    }
    VerifiedCandidates pool(g, wg.weights);
    VertexSet pn, xs, ys;
    for (std::size_t i = 0; i < o.size(); ++i) {
        earlier_neighbors(g, o, i, pn);
        xs.clear();
        ys.clear();
        if (!pn.empty()) {
            const Vertex x = pn.front();
            Vertex y = -1;
            xs.push_back(x);
            for (std::size_t k = 1; k < pn.size(); ++k) {
                const Vertex u = pn[k];
                if (g.adjacent(x, u)) {
                    xs.push_back(u);
                } else if (y < 0) {
                    y = u;
                    ys.push_back(u);
                } else if (g.adjacent(y, u)) {
                    ys.push_back(u);
                } else {
                    return make_certificate(CertificateKind::NotTwoCliques, i + 1, o[i], {x, y, u}, "S3");
                }
            }
        }
        pool.offer(xs, o[i]);
        if (!ys.empty()) pool.offer(ys, o[i]);
    }
    return pool.best();
}

Certified<CliqueResult> max_clique_c6(const WeightedGraph& wg, bool verify) {
    const Graph& g = wg.graph;
    const VertexOrdering o = sweep(g);
    if (verify) {
        if (auto cert = verify_family(g, o, NamedFamily::P3P3bar)) return *cert;
    }
    VerifiedCandidates pool(g, wg.weights);
    VertexSet pn;
    for (std::size_t i = 0; i < o.size(); ++i) {
        earlier_neighbors(g, o, i, pn);
        if (pn.size() < 2) {
            pool.offer(pn, o[i]);
            continue;
        }
        const Vertex x = pn[0];
        const bool clique = g.adjacent(x, pn[1]);
        for (std::size_t k = 2; k < pn.size(); ++k) {
            if (g.adjacent(x, pn[k]) != clique) {
                VertexSet w{x, pn[1], pn[k]};
                std::string name = pattern_name(g, w);
                return make_certificate(CertificateKind::NotCliqueOrStable, i + 1, o[i], std::move(w),
                                        std::move(name));
            }
        }
        if (clique) {
            pool.offer(pn, o[i]);
        } else {
            Vertex pick = pn.front();
            for (Vertex u : pn) {
                if (wg.weights[u] > wg.weights[pick]) pick = u;
            }
            const Vertex single[] = {pick};
            pool.offer(single, o[i]);
        }
    }
    return pool.best();
}

Coloring greedy_color(const Graph& g, const VertexOrdering& o) {
    require_ordering_of(g, o);
    Coloring c;
    c.color.assign(g.order(), 0);
    std::vector<std::size_t> used_by(g.order() + 2, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < o.size(); ++i) {
        const Vertex v = o[i];
        for (Vertex w : g.neighbors(v)) {
            const int cw = c.color[w];
            if (cw > 0 && static_cast<std::size_t>(cw) < used_by.size()) used_by[cw] = i;
        }
        int pick = 1;
        while (used_by[pick] == i) ++pick;
        c.color[v] = pick;
        c.count = std::max(c.count, pick);
    }
    return c;
}

Certified<Coloring> color_chordal(const Graph& g) {
    const VertexOrdering o = sweep(g);
    if (auto cert = verify_family(g, o, NamedFamily::S2)) return *cert;
    return greedy_color(g, o);
}

Certified<Coloring> color_universally_signable(const Graph& g) {
    const std::size_t n = g.order();
    Coloring two;
    two.color.assign(n, 0);
    bool bipartite = true;
    std::vector<Vertex> queue;
    for (std::size_t s = 0; s < n && bipartite; ++s) {
        if (two.color[s]) continue;
        two.color[s] = 1;
        queue.assign(1, static_cast<Vertex>(s));
        for (std::size_t head = 0; head < queue.size() && bipartite; ++head) {
            const Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                if (!two.color[w]) {
                    two.color[w] = 3 - two.color[u];
                    queue.push_back(w);
                } else if (two.color[w] == two.color[u]) {
                    bipartite = false;
                    break;
                }
            }
        }
    }
    if (bipartite) {
        two.count = n == 0 ? 0 : (g.size() == 0 ? 1 : 2);
        return two;
    }
    const VertexOrdering o = sweep(g);
    for (std::size_t i = 0; i < n; ++i) {
        const VertexSet pn = earlier_neighbors(g, o, i);
        if (pn.size() == 2 || is_clique(g, pn)) continue;
        return pattern_certificate(g, CertificateKind::NotInC7, i + 1, o[i], pn, NamedFamily::S3P3P3bar);
    }
    return greedy_color(g, o);
}

Certified<TaggedVertex> find_simplicial_or_degree2(const Graph& g) {
    if (g.empty()) throw Error(ErrorCode::InvalidParameter, "graph is empty");
    const VertexOrdering o = lexbfs(g, 0);
    const Vertex z = o.last();
    const VertexSet nb(g.neighbors(z).begin(), g.neighbors(z).end());
    if (is_clique(g, nb)) return TaggedVertex{z, VertexTag::Simplicial};
    if (nb.size() == 2) return TaggedVertex{z, VertexTag::Degree2};
    return pattern_certificate(g, CertificateKind::NotFound, o.size(), z, nb, NamedFamily::S3P3P3bar);
}

Certified<std::vector<VertexSet>> enumerate_maximal_cliques_3wf(const Graph& g) {
    const std::size_t n = g.order();
    const VertexOrdering o = sweep(g);
    std::vector<Vertex> scratch(n, -1);
    std::vector<VertexSet> candidates;
    for (std::size_t i = 0; i < n; ++i) {
        const VertexSet pn = earlier_neighbors(g, o, i);
        if (pn.empty()) {
            candidates.push_back({o[i]});
            continue;
        }
        const auto sub = induced_subgraph(g, pn, scratch);
        for (const auto& comp : components(sub.graph)) {
            std::size_t deg_sum = 0;
            for (Vertex x : comp) deg_sum += sub.graph.degree(x);
            if (deg_sum != comp.size() * (comp.size() - 1)) {
                return pattern_certificate(g, CertificateKind::NotInC2, i + 1, o[i], pn, NamedFamily::P3);
            }
            candidates.push_back(with_vertex(lift(sub.to_parent, comp), o[i]));
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    // A clique is maximal when no outside vertex sees all of it; scanning the
    // neighbors of its lowest-degree member suffices.
    std::vector<char> in(n, 0);
    std::vector<VertexSet> out;
    for (auto& k : candidates) {
        for (Vertex v : k) in[v] = 1;
        const Vertex anchor = *std::min_element(k.begin(), k.end(), [&](Vertex a, Vertex b) {
            return g.degree(a) < g.degree(b);
        });
        bool maximal = true;
        for (Vertex w : g.neighbors(anchor)) {
            if (in[w]) continue;
            if (std::all_of(k.begin(), k.end(), [&](Vertex v) { return g.adjacent(v, w); })) {
                maximal = false;
                break;
            }
        }
        for (Vertex v : k) in[v] = 0;
        if (maximal) out.push_back(std::move(k));
    }
    return out;
}

}  // namespace lexelim
