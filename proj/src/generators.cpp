#include "lexelim/generators.hpp"

#include <algorithm>
#include <random>

namespace lexelim {

namespace {

class Coin {
public:
    Coin(std::uint64_t num, std::uint64_t den, Seed seed) : num_(num), den_(den), rng_(seed) {
        if (den == 0 || num > den) {
            throw Error(ErrorCode::InvalidParameter, "probability must satisfy 0 <= num <= den, den > 0");
        }
    }

    bool flip() {
        const unsigned __int128 scaled = static_cast<unsigned __int128>(rng_()) * den_;
        return static_cast<std::uint64_t>(scaled >> 64) < num_;
    }

    /// Uniform in [0, bound) by the same multiply-shift reduction.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng_()) * bound) >> 64);
    }

private:
    std::uint64_t num_;
    std::uint64_t den_;
    std::mt19937_64 rng_;
};

void add_path(std::vector<Edge>& edges, std::vector<VertexRole>& roles, Vertex from, Vertex to,
              std::size_t length, int index, Vertex& next) {
    Vertex prev = from;
    for (std::size_t k = 1; k < length; ++k) {
        const Vertex x = next++;
        roles.push_back({x, Role::Path, index});
        edges.emplace_back(prev, x);
        prev = x;
    }
    edges.emplace_back(prev, to);
}

GeneratedConfiguration finish(std::size_t n, std::vector<Edge> edges, std::vector<VertexRole> roles) {
    std::sort(roles.begin(), roles.end(),
              [](const VertexRole& a, const VertexRole& b) { return a.vertex < b.vertex; });
    return {build_graph(n, edges), std::move(roles)};
}

GeneratedConfiguration make_theta(const std::array<std::size_t, 3>& len) {
    for (auto l : len) {
        if (l < 2) throw Error(ErrorCode::InvalidParameter, "theta paths need length >= 2");
    }
    std::vector<Edge> edges;
    std::vector<VertexRole> roles{{0, Role::HubX, -1}, {1, Role::HubY, -1}};
    Vertex next = 2;
    for (int k = 0; k < 3; ++k) add_path(edges, roles, 0, 1, len[k], k, next);
    return finish(static_cast<std::size_t>(next), std::move(edges), std::move(roles));
}

GeneratedConfiguration make_prism(const std::array<std::size_t, 3>& len) {
    for (auto l : len) {
        if (l < 1) throw Error(ErrorCode::InvalidParameter, "prism paths need length >= 1");
    }
    std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
    std::vector<VertexRole> roles;
    for (Vertex x = 0; x < 3; ++x) roles.push_back({x, Role::HubX, -1});
    for (Vertex y = 3; y < 6; ++y) roles.push_back({y, Role::HubY, -1});
    Vertex next = 6;
    for (int k = 0; k < 3; ++k) add_path(edges, roles, k, 3 + k, len[k], k, next);
    return finish(static_cast<std::size_t>(next), std::move(edges), std::move(roles));
}

GeneratedConfiguration make_pyramid(const std::array<std::size_t, 3>& len) {
    std::size_t ones = 0;
    for (auto l : len) {
        if (l < 1) throw Error(ErrorCode::InvalidParameter, "pyramid paths need length >= 1");
        ones += l == 1 ? 1 : 0;
    }
    if (ones > 1) throw Error(ErrorCode::InvalidParameter, "pyramid allows at most one path of length 1");
    std::vector<Edge> edges{{1, 2}, {1, 3}, {2, 3}};
    std::vector<VertexRole> roles{{0, Role::HubX, -1}};
    for (Vertex y = 1; y < 4; ++y) roles.push_back({y, Role::HubY, -1});
    Vertex next = 4;
    for (int k = 0; k < 3; ++k) add_path(edges, roles, 0, 1 + k, len[k], k, next);
    return finish(static_cast<std::size_t>(next), std::move(edges), std::move(roles));
}

void add_cycle(std::size_t rim, std::vector<Edge>& edges, std::vector<VertexRole>& roles) {
    for (std::size_t i = 0; i < rim; ++i) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % rim));
        roles.push_back({static_cast<Vertex>(i), Role::Rim, static_cast<int>(i)});
    }
}

GeneratedConfiguration make_hole(std::size_t rim) {
    if (rim < 4) throw Error(ErrorCode::InvalidParameter, "hole needs length >= 4");
    std::vector<Edge> edges;
    std::vector<VertexRole> roles;
    add_cycle(rim, edges, roles);
    return finish(rim, std::move(edges), std::move(roles));
}

GeneratedConfiguration make_wheel(std::size_t rim, std::vector<std::size_t> spokes) {
    if (rim < 4) throw Error(ErrorCode::InvalidParameter, "wheel rim needs length >= 4");
    std::sort(spokes.begin(), spokes.end());
    spokes.erase(std::unique(spokes.begin(), spokes.end()), spokes.end());
    if (spokes.size() < 3) throw Error(ErrorCode::InvalidParameter, "wheel needs >= 3 spokes");
    if (spokes.back() >= rim) throw Error(ErrorCode::InvalidParameter, "spoke outside the rim");
    std::vector<Edge> edges;
    std::vector<VertexRole> roles;
    add_cycle(rim, edges, roles);
    const Vertex center = static_cast<Vertex>(rim);
    roles.push_back({center, Role::Center, -1});
    for (auto s : spokes) edges.emplace_back(static_cast<Vertex>(s), center);
    return finish(rim + 1, std::move(edges), std::move(roles));
}

}  // namespace

Graph gen_random(std::size_t n, std::uint64_t num, std::uint64_t den, Seed seed) {
    Coin coin(num, den, seed);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (coin.flip()) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
    }
    return build_graph(n, edges);
}

Graph gen_chordal(std::size_t n, std::uint64_t density_num, std::uint64_t density_den, Seed seed) {
    Coin coin(density_num, density_den, seed);
    std::vector<VertexSet> attached(n);
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) {
        const Vertex u = static_cast<Vertex>(coin.below(i));
        VertexSet& mine = attached[i];
        mine.push_back(u);
        for (Vertex w : attached[u]) {
            if (coin.flip()) mine.push_back(w);
        }
        std::sort(mine.begin(), mine.end());
        for (Vertex w : mine) edges.emplace_back(w, static_cast<Vertex>(i));
    }
    return build_graph(n, edges);
}

GeneratedConfiguration gen_configuration(const ConfigParams& params) {
    switch (params.kind) {
        case ConfigKind::Theta: return make_theta(params.lengths);
        case ConfigKind::Prism: return make_prism(params.lengths);
        case ConfigKind::Pyramid: return make_pyramid(params.lengths);
        case ConfigKind::Wheel: return make_wheel(params.rim, params.spokes);
        case ConfigKind::Hole: return make_hole(params.rim);
        default:
            throw Error(ErrorCode::InvalidParameter,
                        "cannot generate " + std::string(to_string(params.kind)));
    }
}

std::optional<Graph> sample_class(ClassId c, std::size_t n, std::uint64_t num, std::uint64_t den,
                                  Seed seed, std::size_t attempts) {
    for (std::size_t i = 0; i < attempts; ++i) {
        Graph g = gen_random(n, num, den, seed + i);
        if (in_class(g, c).member) return g;
    }
    return std::nullopt;
}

}  // namespace lexelim
