#include "lexelim/configurations.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "lexelim/chordal.hpp"

namespace lexelim {

std::string_view to_string(ConfigKind kind) {
    switch (kind) {
        case ConfigKind::Hole: return "Hole";
        case ConfigKind::FourHole: return "FourHole";
        case ConfigKind::LongHole: return "LongHole";
        case ConfigKind::EvenHole: return "EvenHole";
        case ConfigKind::Theta: return "Theta";
        case ConfigKind::SquareTheta: return "SquareTheta";
        case ConfigKind::Prism: return "Prism";
        case ConfigKind::Pyramid: return "Pyramid";
        case ConfigKind::Wheel: return "Wheel";
        case ConfigKind::OneWheel: return "OneWheel";
        case ConfigKind::TwoWheel: return "TwoWheel";
        case ConfigKind::ThreeWheel: return "ThreeWheel";
        case ConfigKind::UniversalWheel: return "UniversalWheel";
        case ConfigKind::EvenWheel: return "EvenWheel";
        case ConfigKind::OddWheel: return "OddWheel";
        case ConfigKind::DHole: return "DHole";
        case ConfigKind::Cap: return "Cap";
        case ConfigKind::Diamond: return "Diamond";
        case ConfigKind::Claw: return "Claw";
        case ConfigKind::S2: return "S2";
        case ConfigKind::S3: return "S3";
        case ConfigKind::P3: return "P3";
        case ConfigKind::P3bar: return "P3bar";
    }
    return "?";
}

std::optional<ConfigKind> parse_config_kind(std::string_view name) {
    for (ConfigKind k : kAllConfigKinds) {
        std::string_view s = to_string(k);
        if (s.size() != name.size()) continue;
        bool same = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (std::tolower(static_cast<unsigned char>(s[i])) !=
                std::tolower(static_cast<unsigned char>(name[i]))) {
                same = false;
                break;
            }
        }
        if (same) return k;
    }
    return std::nullopt;
}

std::vector<ConfigKind> KindSet::members() const {
    std::vector<ConfigKind> out;
    for (ConfigKind k : kAllConfigKinds) {
        if (contains(k)) out.push_back(k);
    }
    return out;
}

std::string_view to_string(ClassId c) {
    switch (c) {
        case ClassId::C1: return "C1";
        case ClassId::C2: return "C2";
        case ClassId::C3: return "C3";
        case ClassId::C4: return "C4";
        case ClassId::C5: return "C5";
        case ClassId::C6: return "C6";
        case ClassId::C7: return "C7";
        case ClassId::C8: return "C8";
        case ClassId::OddSignable: return "OddSignable";
        case ClassId::EvenSignable: return "EvenSignable";
        case ClassId::EvenHoleFree: return "EvenHoleFree";
        case ClassId::WheelFree: return "WheelFree";
        case ClassId::FourHoleFreeOddSignable: return "FourHoleFreeOddSignable";
        case ClassId::SquareThetaFreeEvenSignable: return "SquareThetaFreeEvenSignable";
    }
    return "?";
}

std::optional<ClassId> parse_class_id(std::string_view name) {
    std::string lower(name);
    for (char& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (lower == "universally-signable" || lower == "universallysignable") return ClassId::C7;
    if (lower == "chordal") return ClassId::C8;
    if (lower == "odd-signable") return ClassId::OddSignable;
    if (lower == "even-signable") return ClassId::EvenSignable;
    if (lower == "even-hole-free" || lower == "ehf") return ClassId::EvenHoleFree;
    if (lower == "wheel-free") return ClassId::WheelFree;
    if (lower == "4hf-odd-signable") return ClassId::FourHoleFreeOddSignable;
    if (lower == "stf-even-signable") return ClassId::SquareThetaFreeEvenSignable;
    for (ClassId c : kAllClasses) {
        std::string s(to_string(c));
        for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        if (s == lower) return c;
    }
    return std::nullopt;
}

KindSet forbidden_kinds(ClassId c) {
    using K = ConfigKind;
    switch (c) {
        case ClassId::C1: return {K::OneWheel, K::Theta, K::Pyramid};
        case ClassId::C2: return {K::ThreeWheel};
        case ClassId::C3: return {K::TwoWheel, K::Prism, K::Pyramid};
        case ClassId::C4: return {K::OneWheel, K::ThreeWheel, K::Theta, K::Pyramid};
        case ClassId::C5: return {K::OneWheel, K::TwoWheel, K::Prism, K::Theta, K::Pyramid};
        case ClassId::C6: return {K::TwoWheel, K::ThreeWheel, K::Prism, K::Pyramid};
        case ClassId::C7: return {K::Wheel, K::Prism, K::Theta, K::Pyramid};
        case ClassId::C8: return {K::Hole};
        case ClassId::OddSignable: return {K::Theta, K::Prism, K::EvenWheel};
        case ClassId::EvenSignable: return {K::Pyramid, K::OddWheel};
        case ClassId::EvenHoleFree: return {K::EvenHole};
        case ClassId::WheelFree: return {K::Wheel};
        case ClassId::FourHoleFreeOddSignable:
            return {K::FourHole, K::Theta, K::Prism, K::EvenWheel};
        case ClassId::SquareThetaFreeEvenSignable:
            return {K::SquareTheta, K::Pyramid, K::OddWheel};
    }
    return {};
}

namespace {

using K = ConfigKind;

constexpr KindSet kHoleKinds{K::Hole, K::FourHole, K::LongHole, K::EvenHole};
constexpr KindSet kWheelKinds{K::Wheel,          K::OneWheel,  K::TwoWheel, K::ThreeWheel,
                              K::UniversalWheel, K::EvenWheel, K::OddWheel, K::DHole};
// Kinds every realization of which contains a hole.
constexpr KindSet kHoleContaining = kHoleKinds | kWheelKinds |
                                    KindSet{K::Theta, K::SquareTheta, K::Prism, K::Pyramid, K::Cap};

struct KindShape {
    std::size_t min_order;
    std::size_t max_order;  // 0: unbounded
    std::size_t min_degree;
    bool connected;
};

KindShape shape_of(ConfigKind k) {
    switch (k) {
        case K::Hole: case K::EvenHole: return {4, 0, 2, true};
        case K::FourHole: return {4, 4, 2, true};
        case K::LongHole: return {5, 0, 2, true};
        case K::Theta: case K::SquareTheta: return {5, 0, 2, true};
        case K::Prism: case K::Pyramid: return {6, 0, 2, true};
        case K::OneWheel: return {6, 0, 2, true};
        case K::Wheel: case K::TwoWheel: case K::ThreeWheel: case K::UniversalWheel:
        case K::EvenWheel: case K::OddWheel: case K::DHole: return {5, 0, 2, true};
        case K::Cap: return {5, 0, 2, true};
        case K::Diamond: return {4, 4, 2, true};
        case K::Claw: return {4, 4, 1, true};
        case K::S2: return {2, 2, 0, false};
        case K::S3: case K::P3bar: return {3, 3, 0, false};
        case K::P3: return {3, 3, 1, true};
    }
    return {0, 0, 0, false};
}

// Adjacency restricted to a vertex subset of a small graph (bit rows).
struct BitView {
    const Graph* g;
    std::uint64_t mask;

    std::size_t bound() const { return g->order(); }
    std::size_t count() const { return static_cast<std::size_t>(std::popcount(mask)); }
    std::uint64_t nbr(Vertex v) const { return g->row(v) & mask; }
    std::size_t degree(Vertex v) const { return static_cast<std::size_t>(std::popcount(nbr(v))); }
    bool adj(Vertex u, Vertex v) const { return (g->row(u) >> v) & 1U; }
    template <class F> void each_vertex(F&& f) const {
        for (std::uint64_t m = mask; m; m &= m - 1) f(static_cast<Vertex>(std::countr_zero(m)));
    }
    template <class F> void each_neighbor(Vertex v, F&& f) const {
        for (std::uint64_t m = nbr(v); m; m &= m - 1) f(static_cast<Vertex>(std::countr_zero(m)));
    }
};

struct GraphView {
    const Graph* g;

    std::size_t bound() const { return g->order(); }
    std::size_t count() const { return g->order(); }
    std::size_t degree(Vertex v) const { return g->degree(v); }
    bool adj(Vertex u, Vertex v) const { return g->adjacent(u, v); }
    template <class F> void each_vertex(F&& f) const {
        for (std::size_t v = 0; v < g->order(); ++v) f(static_cast<Vertex>(v));
    }
    template <class F> void each_neighbor(Vertex v, F&& f) const {
        for (Vertex w : g->neighbors(v)) f(w);
    }
};

template <class View>
class Recognizer {
public:
    Recognizer(const View& view, bool want_roles) : v_(view), want_roles_(want_roles) {}

    KindSet run() {
        v_.each_vertex([&](Vertex x) { vertices_.push_back(x); });
        const std::size_t n = vertices_.size();
        std::size_t edges2 = 0;
        std::size_t max_deg = 0, min_deg = n;
        for (Vertex x : vertices_) {
            const std::size_t d = v_.degree(x);
            edges2 += d;
            max_deg = std::max(max_deg, d);
            min_deg = std::min(min_deg, d);
        }
        const std::size_t m = edges2 / 2;
        small_kinds(n, m, max_deg);
        if (n < 4 || min_deg < 2 || !connected(vertices_, -1)) return kinds_;
        if (max_deg == 2) {
            if (auto rim = cycle_order(-1)) record_hole(*rim);
            return kinds_;
        }
        for (Vertex c : vertices_) {
            if (v_.degree(c) >= 3) check_wheel(c);
            else if (v_.degree(c) == 2) check_cap(c);
        }
        if (max_deg == 3) check_three_path();
        return kinds_;
    }

    std::optional<std::vector<VertexRole>> roles(ConfigKind k) const {
        if (!kinds_.contains(k)) return std::nullopt;
        return roles_[static_cast<std::size_t>(k)];
    }

private:
    void add(ConfigKind k, const std::vector<VertexRole>& roles) {
        if (kinds_.contains(k)) return;
        kinds_.insert(k);
        if (want_roles_) roles_[static_cast<std::size_t>(k)] = roles;
    }

    std::vector<VertexRole> plain_roles() const {
        std::vector<VertexRole> r;
        if (!want_roles_) return r;
        for (Vertex x : vertices_) r.push_back({x, Role::None, -1});
        return r;
    }

    void small_kinds(std::size_t n, std::size_t m, std::size_t max_deg) {
        if (n == 2 && m == 0) add(K::S2, plain_roles());
        if (n == 3 && m == 0) add(K::S3, plain_roles());
        if (n == 3 && m == 2) add(K::P3, plain_roles());
        if (n == 3 && m == 1) add(K::P3bar, plain_roles());
        if (n == 4 && m == 5) add(K::Diamond, plain_roles());
        if (n == 4 && m == 3 && max_deg == 3) {
            std::vector<VertexRole> r;
            for (Vertex x : vertices_) {
                r.push_back({x, v_.degree(x) == 3 ? Role::Center : Role::None, -1});
            }
            add(K::Claw, want_roles_ ? r : std::vector<VertexRole>{});
        }
    }

    bool connected(const std::vector<Vertex>& verts, Vertex skip) {
        if (verts.empty()) return true;
        scratch_.assign(v_.bound(), 0);
        if (skip >= 0) scratch_[skip] = 2;
        Vertex start = verts.front() == skip ? verts[1] : verts.front();
        std::vector<Vertex> stack{start};
        scratch_[start] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            v_.each_neighbor(x, [&](Vertex y) {
                if (scratch_[y] == 0) {
                    scratch_[y] = 1;
                    ++reached;
                    stack.push_back(y);
                }
            });
        }
        return reached == verts.size() - (skip >= 0 ? 1 : 0);
    }

    // Cyclic order of the graph minus `skip` when it is a hole.
    std::optional<std::vector<Vertex>> cycle_order(Vertex skip) const {
        std::vector<Vertex> rest;
        for (Vertex x : vertices_) {
            if (x == skip) continue;
            std::size_t d = v_.degree(x) - (skip >= 0 && v_.adj(x, skip) ? 1 : 0);
            if (d != 2) return std::nullopt;
            rest.push_back(x);
        }
        if (rest.size() < 4) return std::nullopt;
        std::vector<Vertex> order{rest.front()};
        Vertex prev = -1;
        Vertex cur = rest.front();
        for (;;) {
            Vertex next = -1;
            v_.each_neighbor(cur, [&](Vertex y) {
                if (y == skip || y == prev) return;
                if (next < 0) next = y;
            });
            if (prev < 0) {
                // Start towards the smaller neighbor for a canonical direction.
                Vertex a = -1, b = -1;
                v_.each_neighbor(cur, [&](Vertex y) {
                    if (y == skip) return;
                    if (a < 0) a = y; else b = y;
                });
                next = std::min(a, b);
            }
            if (next == rest.front()) break;
            if (order.size() >= rest.size()) return std::nullopt;
            order.push_back(next);
            prev = cur;
            cur = next;
        }
        if (order.size() != rest.size()) return std::nullopt;
        return order;
    }

    void record_hole(const std::vector<Vertex>& rim) {
        std::vector<VertexRole> r;
        if (want_roles_) {
            for (std::size_t i = 0; i < rim.size(); ++i) r.push_back({rim[i], Role::Rim, static_cast<int>(i)});
            std::sort(r.begin(), r.end(), [](const VertexRole& a, const VertexRole& b) { return a.vertex < b.vertex; });
        }
        add(K::Hole, r);
        if (rim.size() == 4) add(K::FourHole, r);
        if (rim.size() >= 5) add(K::LongHole, r);
        if (rim.size() % 2 == 0) add(K::EvenHole, r);
    }

    void check_wheel(Vertex c) {
        auto rim = cycle_order(c);
        if (!rim) return;
        const std::size_t k = rim->size();
        std::vector<char> f(k);
        std::size_t spokes = 0;
        for (std::size_t i = 0; i < k; ++i) {
            f[i] = v_.adj(c, (*rim)[i]) ? 1 : 0;
            spokes += f[i];
        }
        if (spokes < 3) return;
        std::vector<VertexRole> r;
        if (want_roles_) {
            r.push_back({c, Role::Center, -1});
            for (std::size_t i = 0; i < k; ++i) r.push_back({(*rim)[i], Role::Rim, static_cast<int>(i)});
            std::sort(r.begin(), r.end(), [](const VertexRole& a, const VertexRole& b) { return a.vertex < b.vertex; });
        }
        add(K::Wheel, r);
        bool one = false, two = false, three = false;
        for (std::size_t i = 0; i < k; ++i) {
            const bool x = f[(i + k - 1) % k], y = f[i], z = f[(i + 1) % k];
            if (y && !x && !z) one = true;
            if (y && ((x && !z) || (z && !x))) two = true;
            if (x && y && z) three = true;
        }
        if (one) add(K::OneWheel, r);
        if (two) add(K::TwoWheel, r);
        if (three) add(K::ThreeWheel, r);
        if (spokes == k) add(K::UniversalWheel, r);
        if (three && spokes == 3) add(K::DHole, r);
        // Sectors: one per spoke; a sector has length 1 when two consecutive
        // rim vertices are both spokes.
        std::size_t unit_sectors = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (f[i] && f[(i + 1) % k]) ++unit_sectors;
        }
        if (spokes % 2 == 0) add(K::EvenWheel, r);
        if (unit_sectors % 2 == 1) add(K::OddWheel, r);
    }

    void check_cap(Vertex c) {
        Vertex a = -1, b = -1;
        v_.each_neighbor(c, [&](Vertex y) { if (a < 0) a = y; else b = y; });
        if (!v_.adj(a, b)) return;
        auto rim = cycle_order(c);
        if (!rim) return;
        std::vector<VertexRole> r;
        if (want_roles_) {
            r.push_back({c, Role::Center, -1});
            for (std::size_t i = 0; i < rim->size(); ++i) r.push_back({(*rim)[i], Role::Rim, static_cast<int>(i)});
            std::sort(r.begin(), r.end(), [](const VertexRole& x, const VertexRole& y) { return x.vertex < y.vertex; });
        }
        add(K::Cap, r);
    }

    bool is_triangle(Vertex a, Vertex b, Vertex c) const {
        return v_.adj(a, b) && v_.adj(b, c) && v_.adj(a, c);
    }

    bool induces_hole(const std::vector<Vertex>& verts) {
        if (verts.size() < 4) return false;
        for (Vertex x : verts) {
            std::size_t d = 0;
            for (Vertex y : verts) {
                if (y != x && v_.adj(x, y)) ++d;
            }
            if (d != 2) return false;
        }
        // 2-regular; connected iff walking the cycle visits every vertex.
        std::vector<Vertex> seen{verts.front()};
        Vertex prev = -1, cur = verts.front();
        for (;;) {
            Vertex next = -1;
            for (Vertex y : verts) {
                if (y != cur && y != prev && v_.adj(cur, y)) {
                    next = y;
                    break;
                }
            }
            if (next == verts.front()) break;
            seen.push_back(next);
            prev = cur;
            cur = next;
            if (seen.size() > verts.size()) return false;
        }
        return seen.size() == verts.size();
    }

    // Three hub-to-hub paths from ends `xs` to ends `ys` (each a single
    // vertex or a triangle). Returns the paths when the whole graph is
    // exactly their union and every two of them induce a hole.
    std::optional<std::array<std::vector<Vertex>, 3>> trace_paths(const std::vector<Vertex>& xs,
                                                                  const std::vector<Vertex>& ys) {
        scratch_.assign(v_.bound(), 0);
        for (Vertex x : xs) scratch_[x] = 1;
        for (Vertex y : ys) scratch_[y] = 2;
        std::vector<std::pair<Vertex, Vertex>> starts;
        if (xs.size() == 1) {
            v_.each_neighbor(xs[0], [&](Vertex s) { starts.emplace_back(xs[0], s); });
        } else {
            for (Vertex x : xs) {
                v_.each_neighbor(x, [&](Vertex s) {
                    if (scratch_[s] != 1) starts.emplace_back(x, s);
                });
            }
        }
        if (starts.size() != 3) return std::nullopt;
        std::array<std::vector<Vertex>, 3> paths;
        std::size_t covered = xs.size() + ys.size();
        std::vector<Vertex> ends;
        for (std::size_t i = 0; i < 3; ++i) {
            auto [x, s] = starts[i];
            auto& path = paths[i];
            path = {x};
            Vertex prev = x, cur = s;
            while (scratch_[cur] == 0) {
                path.push_back(cur);
                ++covered;
                if (path.size() > vertices_.size()) return std::nullopt;
                Vertex next = -1;
                v_.each_neighbor(cur, [&](Vertex y) { if (y != prev && next < 0) next = y; });
                prev = cur;
                cur = next;
            }
            if (scratch_[cur] != 2) return std::nullopt;
            path.push_back(cur);
            ends.push_back(cur);
        }
        std::sort(ends.begin(), ends.end());
        if (ys.size() == 1) {
            if (ends != std::vector<Vertex>(3, ys[0])) return std::nullopt;
        } else if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) {
            return std::nullopt;
        }
        if (covered != vertices_.size()) return std::nullopt;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i + 1; j < 3; ++j) {
                std::vector<Vertex> pair = paths[i];
                pair.insert(pair.end(), paths[j].begin(), paths[j].end());
                std::sort(pair.begin(), pair.end());
                pair.erase(std::unique(pair.begin(), pair.end()), pair.end());
                if (!induces_hole(pair)) return std::nullopt;
            }
        }
        return paths;
    }

    std::vector<VertexRole> path_roles(const std::vector<Vertex>& xs, const std::vector<Vertex>& ys,
                                       const std::array<std::vector<Vertex>, 3>& paths) const {
        std::vector<VertexRole> r;
        if (!want_roles_) return r;
        for (Vertex x : xs) r.push_back({x, Role::HubX, -1});
        for (Vertex y : ys) r.push_back({y, Role::HubY, -1});
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 1; j + 1 < paths[i].size(); ++j) {
                r.push_back({paths[i][j], Role::Path, static_cast<int>(i)});
            }
        }
        std::sort(r.begin(), r.end(), [](const VertexRole& a, const VertexRole& b) { return a.vertex < b.vertex; });
        return r;
    }

    void check_three_path() {
        std::vector<Vertex> hubs;
        for (Vertex x : vertices_) {
            if (v_.degree(x) == 3) hubs.push_back(x);
        }
        if (hubs.size() == 2) {
            if (v_.adj(hubs[0], hubs[1])) return;
            std::vector<Vertex> xs{hubs[0]}, ys{hubs[1]};
            if (auto paths = trace_paths(xs, ys)) {
                auto r = path_roles(xs, ys, *paths);
                add(K::Theta, r);
                std::size_t short_paths = 0;
                for (const auto& p : *paths) short_paths += p.size() == 3 ? 1 : 0;
                if (short_paths >= 2) add(K::SquareTheta, r);
            }
        } else if (hubs.size() == 4) {
            for (std::size_t apex = 0; apex < 4; ++apex) {
                std::vector<Vertex> tri;
                for (std::size_t i = 0; i < 4; ++i) {
                    if (i != apex) tri.push_back(hubs[i]);
                }
                if (!is_triangle(tri[0], tri[1], tri[2])) continue;
                std::vector<Vertex> xs{hubs[apex]};
                if (auto paths = trace_paths(xs, tri)) {
                    add(K::Pyramid, path_roles(xs, tri, *paths));
                    return;
                }
            }
        } else if (hubs.size() == 6) {
            const Vertex h0 = hubs[0];
            for (std::size_t i = 1; i < 6; ++i) {
                for (std::size_t j = i + 1; j < 6; ++j) {
                    if (!is_triangle(h0, hubs[i], hubs[j])) continue;
                    std::vector<Vertex> xs{h0, hubs[i], hubs[j]}, ys;
                    for (std::size_t t = 1; t < 6; ++t) {
                        if (t != i && t != j) ys.push_back(hubs[t]);
                    }
                    if (!is_triangle(ys[0], ys[1], ys[2])) continue;
                    if (auto paths = trace_paths(xs, ys)) {
                        add(K::Prism, path_roles(xs, ys, *paths));
                        return;
                    }
                }
            }
        }
    }

    const View& v_;
    bool want_roles_;
    std::vector<Vertex> vertices_;
    std::vector<int> scratch_;
    KindSet kinds_;
    std::array<std::vector<VertexRole>, kConfigKindCount> roles_;
};

KindSet classify_mask(const Graph& g, std::uint64_t mask) {
    BitView view{&g, mask};
    return Recognizer<BitView>(view, false).run();
}

ConfigurationWitness make_witness(const Graph& g, const VertexSet& vertices, ConfigKind kind) {
    ConfigurationWitness w;
    w.kind = kind;
    w.vertices = vertices;
    auto sub = induced_subgraph(g, vertices);
    if (auto roles = configuration_roles(sub.graph, kind)) {
        for (auto& r : *roles) r.vertex = sub.to_parent[r.vertex];
        w.roles = std::move(*roles);
    }
    return w;
}

void require_cap(const Graph& g, std::size_t cap) {
    if (g.order() > cap || g.order() > kSmallGraphLimit) {
        throw Error(ErrorCode::TooLarge, "graph has " + std::to_string(g.order()) +
                                             " vertices; brute-force cap is " +
                                             std::to_string(std::min(cap, kSmallGraphLimit)));
    }
}

bool mask_connected(const Graph& g, std::uint64_t mask) {
    if (mask == 0) return true;
    std::uint64_t reached = mask & (~mask + 1);
    std::uint64_t frontier = reached;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) {
            next |= g.row(std::countr_zero(f));
        }
        next &= mask & ~reached;
        reached |= next;
        frontier = next;
    }
    return reached == mask;
}

}  // namespace

KindSet classify_configuration(const Graph& g) {
    if (g.is_small()) {
        const std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0}
                                                  : (std::uint64_t{1} << g.order()) - 1;
        return classify_mask(g, all);
    }
    GraphView view{&g};
    return Recognizer<GraphView>(view, false).run();
}

std::optional<std::vector<VertexRole>> configuration_roles(const Graph& g, ConfigKind kind) {
    GraphView view{&g};
    Recognizer<GraphView> rec(view, true);
    rec.run();
    return rec.roles(kind);
}

std::vector<std::size_t> wheel_sectors(const Graph& g, Vertex center) {
    if (!g.contains(center)) throw Error(ErrorCode::InvalidVertex, "center out of range");
    VertexSet rim_set;
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (static_cast<Vertex>(v) != center) rim_set.push_back(static_cast<Vertex>(v));
    }
    auto rim = induced_subgraph(g, rim_set);
    const std::size_t k = rim.graph.order();
    bool hole = k >= 4 && is_connected(rim.graph);
    for (std::size_t i = 0; hole && i < k; ++i) hole = rim.graph.degree(static_cast<Vertex>(i)) == 2;
    if (!hole || g.degree(center) < 3) {
        throw Error(ErrorCode::NotAWheel, "graph minus " + std::to_string(center) +
                                              " is not a hole with at least three spokes");
    }
    // Walk the rim from the smallest spoke towards its smaller rim neighbor.
    Vertex start = -1;
    for (std::size_t i = 0; i < k; ++i) {
        if (g.adjacent(center, rim.to_parent[i])) {
            start = static_cast<Vertex>(i);
            break;
        }
    }
    std::vector<Vertex> order{start};
    Vertex prev = -1, cur = start;
    {
        auto nb = rim.graph.neighbors(start);
        Vertex next = std::min(nb[0], nb[1]);
        while (next != start) {
            order.push_back(next);
            prev = cur;
            cur = next;
            auto nn = rim.graph.neighbors(cur);
            next = nn[0] == prev ? nn[1] : nn[0];
        }
    }
    std::vector<std::size_t> sectors;
    std::size_t length = 0;
    for (std::size_t i = 1; i <= k; ++i) {
        ++length;
        if (g.adjacent(center, rim.to_parent[order[i % k]])) {
            sectors.push_back(length);
            length = 0;
        }
    }
    return sectors;
}

namespace {

struct SearchPlan {
    std::size_t min_order = 0;
    std::size_t max_order = 0;
    bool prune_degree = true;
    bool prune_connected = true;
    bool needs_hole = true;
};

SearchPlan plan_for(KindSet kinds, std::size_t n) {
    SearchPlan plan;
    plan.min_order = n + 1;
    plan.max_order = 0;
    for (ConfigKind k : kinds.members()) {
        const KindShape s = shape_of(k);
        plan.min_order = std::min(plan.min_order, s.min_order);
        plan.max_order = std::max(plan.max_order, s.max_order == 0 ? n : s.max_order);
        if (s.min_degree < 2) plan.prune_degree = false;
        if (!s.connected) plan.prune_connected = false;
        if (!kHoleContaining.contains(k)) plan.needs_hole = false;
    }
    plan.max_order = std::min(plan.max_order, n);
    return plan;
}

std::optional<ConfigurationWitness> subset_search(const Graph& g, KindSet kinds, const SearchPlan& plan) {
    const std::size_t n = g.order();
    std::vector<Vertex> combo;
    for (std::size_t k = plan.min_order; k <= plan.max_order; ++k) {
        combo.resize(k);
        for (std::size_t i = 0; i < k; ++i) combo[i] = static_cast<Vertex>(i);
        for (;;) {
            std::uint64_t mask = 0;
            for (Vertex v : combo) mask |= std::uint64_t{1} << v;
            bool viable = true;
            if (plan.prune_degree) {
                for (Vertex v : combo) {
                    if (std::popcount(g.row(v) & mask) < 2) {
                        viable = false;
                        break;
                    }
                }
            }
            if (viable && plan.prune_connected) viable = mask_connected(g, mask);
            if (viable) {
                const KindSet found = classify_mask(g, mask) & kinds;
                if (!found.empty()) {
                    return make_witness(g, VertexSet(combo.begin(), combo.end()), found.members().front());
                }
            }
            // Next k-combination in lexicographic order.
            std::size_t i = k;
            while (i > 0 && static_cast<std::size_t>(combo[i - 1]) == n - k + (i - 1)) --i;
            if (i == 0) break;
            ++combo[i - 1];
            for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<ConfigurationWitness> find_configuration_by_subsets(const Graph& g, KindSet kinds,
                                                                  std::size_t cap) {
    require_cap(g, cap);
    if (kinds.empty()) return std::nullopt;
    SearchPlan plan = plan_for(kinds, g.order());
    plan.prune_degree = false;
    plan.prune_connected = false;
    return subset_search(g, kinds, plan);
}

std::optional<ConfigurationWitness> find_configuration(const Graph& g, KindSet kinds, std::size_t cap) {
    require_cap(g, cap);
    if (kinds.empty()) return std::nullopt;
    const SearchPlan plan = plan_for(kinds, g.order());
    if (plan.needs_hole && is_chordal(g)) return std::nullopt;
    return subset_search(g, kinds, plan);
}

std::optional<ConfigurationWitness> contains_configuration(const Graph& g, ConfigKind kind,
                                                           std::size_t cap) {
    require_cap(g, cap);
    if (kHoleKinds.contains(kind)) {
        auto accept = [kind](std::size_t len) {
            switch (kind) {
                case K::FourHole: return len == 4;
                case K::LongHole: return len >= 5;
                case K::EvenHole: return len % 2 == 0;
                default: return true;
            }
        };
        auto cycle = first_hole(g, accept);
        if (!cycle) return std::nullopt;
        VertexSet vertices(cycle->begin(), cycle->end());
        std::sort(vertices.begin(), vertices.end());
        return make_witness(g, vertices, kind);
    }
    return find_configuration(g, KindSet{kind}, cap);
}

Membership in_class(const Graph& g, ClassId c, std::size_t cap) {
    const KindSet forbidden = forbidden_kinds(c);
    // Every excluded configuration of every class contains a hole.
    if (is_chordal(g)) return {};
    require_cap(g, cap);
    Membership result;
    if (auto w = find_configuration(g, forbidden, cap)) {
        result.member = false;
        result.witness = std::move(w);
    }
    return result;
}

}  // namespace lexelim
