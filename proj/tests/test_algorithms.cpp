#include <gtest/gtest.h>

#include <random>

#include "lexelim/algorithms.hpp"
#include "lexelim/chordal.hpp"
#include "lexelim/configurations.hpp"
#include "lexelim/generators.hpp"
#include "oracles.hpp"

using namespace lexelim;

namespace {

Graph k(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return build_graph(static_cast<std::size_t>(n), e);
}

Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return build_graph(10, e);
}

Graph octahedron() {
    std::vector<Edge> e;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (u / 2 != v / 2) e.emplace_back(u, v);
    return build_graph(6, e);
}

Graph p4() { return build_graph(4, {{0, 1}, {1, 2}, {2, 3}}); }

Graph two_triangles() { return build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}); }

Weight weight_of(const Certified<CliqueResult>& r) { return std::get<CliqueResult>(r).weight; }

std::vector<Weight> random_weights(std::size_t n, std::mt19937_64& rng) {
    std::vector<Weight> w(n);
    for (auto& x : w) x = static_cast<Weight>(rng() % 101);
    return w;
}

// The result is a clique of g whose weight adds up and equals the oracle's optimum.
void expect_optimal(const WeightedGraph& wg, const Certified<CliqueResult>& r) {
    ASSERT_TRUE(has_result(r));
    const auto& c = std::get<CliqueResult>(r);
    ASSERT_TRUE(is_clique(wg.graph, c.clique));
    ASSERT_EQ(wg.weight_of(c.clique), c.weight);
    ASSERT_EQ(c.weight, oracle::max_clique_weight(wg.graph, wg.weights));
}

}  // namespace

TEST(BruteForce, Examples) {
    EXPECT_EQ(max_clique_bruteforce(WeightedGraph(k(3), {1, 2, 3})).weight, 6);
    EXPECT_EQ(max_clique_bruteforce(WeightedGraph(oracle::cycle_graph(5))).weight, 2);
    const auto edgeless = max_clique_bruteforce(WeightedGraph(build_graph(2, {}), {7, 7}));
    EXPECT_EQ(edgeless.weight, 7);
    EXPECT_EQ(edgeless.clique, (VertexSet{0}));
    EXPECT_EQ(max_clique_bruteforce(WeightedGraph(build_graph(0, {}))).clique, VertexSet{});
    EXPECT_THROW(max_clique_bruteforce(WeightedGraph(gen_random(21, 1, 2, 0))), Error);
    // All-zero weights still give a nonempty clique; {0} is lex-smaller than {0, 1}.
    EXPECT_EQ(max_clique_bruteforce(WeightedGraph(p4(), {0, 0, 0, 0})).clique, (VertexSet{0}));
}

TEST(BruteForce, MatchesBronKerbosch) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 1 + t % 14;
        const WeightedGraph wg(gen_random(n, 1 + t % 5, 6, rng()), random_weights(n, rng));
        expect_optimal(wg, max_clique_bruteforce(wg));
    }
}

TEST(ChordalClique, Examples) {
    EXPECT_EQ(weight_of(max_clique_chordal(WeightedGraph(build_graph(3, {{0, 1}, {1, 2}}), {5, 1, 5}))), 6);
    EXPECT_EQ(weight_of(max_clique_chordal(WeightedGraph(k(4)))), 4);
    EXPECT_FALSE(has_result(max_clique_chordal(WeightedGraph(oracle::cycle_graph(4)))));
}

TEST(ChordalClique, MatchesOracle) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + t % 15;
        const WeightedGraph wg(gen_chordal(n, 1 + t % 3, 3, rng()), random_weights(n, rng));
        expect_optimal(wg, max_clique_chordal(wg));
        expect_optimal(wg, max_clique_ehf(wg));
    }
}

TEST(EhfClique, Examples) {
    EXPECT_EQ(weight_of(max_clique_ehf(WeightedGraph(oracle::cycle_graph(4)))), 2);
    const auto r = max_clique_ehf(WeightedGraph(oracle::wheel_graph(6, 0b111111)));
    if (has_result(r)) {
        EXPECT_EQ(weight_of(r), 3);
    } else {
        const auto& c = std::get<Certificate>(r);
        EXPECT_EQ(c.kind, CertificateKind::NeighborhoodNotChordal);
        EXPECT_GE(c.witness.size(), 4u);
    }
}

TEST(EhfClique, RobustOnArbitraryInput) {
    std::mt19937_64 rng(3);
    int certificates = 0;
    for (int t = 0; t < 800; ++t) {
        const std::size_t n = 1 + t % 10;
        const Graph g = gen_random(n, 1 + t % 5, 6, rng());
        const WeightedGraph wg(g, random_weights(n, rng));
        const auto r = max_clique_ehf(wg);
        if (has_result(r)) {
            expect_optimal(wg, r);
            continue;
        }
        ++certificates;
        const auto& c = std::get<Certificate>(r);
        const auto o = lexbfs(g, 0);
        ASSERT_EQ(o[c.position - 1], c.vertex);
        for (std::size_t i = 0; i < c.witness.size(); ++i) {
            const Vertex x = c.witness[i];
            ASSERT_TRUE(g.adjacent(x, c.vertex));
            ASSERT_TRUE(o.precedes(x, c.vertex));
        }
        const auto rows = oracle::rows_of(g);
        oracle::Mask m = 0;
        for (Vertex x : c.witness) m |= oracle::Mask{1} << x;
        ASSERT_TRUE(oracle::is_hole_mask(rows, m));
        ASSERT_FALSE(in_class(g, ClassId::FourHoleFreeOddSignable).member);
    }
    EXPECT_GT(certificates, 0);
}

TEST(C2Clique, Examples) {
    EXPECT_EQ(weight_of(max_clique_c2(WeightedGraph(petersen()))), 2);
    EXPECT_EQ(weight_of(max_clique_c2(WeightedGraph(k(4)))), 4);
    const auto r = max_clique_c2(WeightedGraph(oracle::wheel_graph(6, 0b111111)));
    ASSERT_FALSE(has_result(r));
    const auto& c = std::get<Certificate>(r);
    EXPECT_EQ(c.kind, CertificateKind::NeighborhoodNotChordal);
    EXPECT_EQ(c.vertex, 6);
    EXPECT_EQ(c.witness.size(), 6u);
}

TEST(C3Clique, Examples) {
    const Graph k33 = build_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    EXPECT_EQ(weight_of(max_clique_c3(WeightedGraph(k33))), 2);
    EXPECT_EQ(weight_of(max_clique_c3(WeightedGraph(octahedron()))), 3);
    EXPECT_EQ(weight_of(max_clique_c3(WeightedGraph(k(4), {1, 1, 1, 9}))), 12);
}

TEST(C4Clique, Examples) {
    EXPECT_EQ(weight_of(max_clique_c4(WeightedGraph(oracle::cycle_graph(5)))), 2);
    EXPECT_EQ(weight_of(max_clique_c4(WeightedGraph(two_triangles(), {2, 2, 2, 2, 2, 2}))), 6);
    EXPECT_EQ(weight_of(max_clique_c4(WeightedGraph(p4(), {1, 5, 5, 1}))), 10);
}

TEST(C6Clique, Examples) {
    EXPECT_EQ(weight_of(max_clique_c6(WeightedGraph(petersen()))), 2);
    EXPECT_EQ(weight_of(max_clique_c6(WeightedGraph(build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})))), 2);
    EXPECT_EQ(weight_of(max_clique_c6(WeightedGraph(k(4)))), 4);
}

TEST(ClassCliques, MatchOracleOnMembers) {
    struct Case {
        ClassId cls;
        Certified<CliqueResult> (*run)(const WeightedGraph&);
    };
    const Case cases[] = {
        {ClassId::C2, [](const WeightedGraph& wg) { return max_clique_c2(wg); }},
        {ClassId::C3, [](const WeightedGraph& wg) { return max_clique_c3(wg, true); }},
        {ClassId::C4, [](const WeightedGraph& wg) { return max_clique_c4(wg, true); }},
        {ClassId::C6, [](const WeightedGraph& wg) { return max_clique_c6(wg, true); }},
    };
    std::mt19937_64 rng(4);
    for (const Case& c : cases) {
        int members = 0;
        for (Seed s = 0; members < 60; ++s) {
            const std::size_t n = 4 + s % 8;
            const auto g = sample_class(c.cls, n, 1 + s % 3, 4, s * 1000, 200);
            if (!g) continue;
            ++members;
            const WeightedGraph wg(*g, random_weights(n, rng));
            expect_optimal(wg, c.run(wg));
            // Without the matrix and with it.
            g->materialize_matrix();
            expect_optimal(wg, c.run(wg));
        }
    }
}

TEST(ClassCliques, OffClassInputGivesCliqueOrCertificate) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 400; ++t) {
        const std::size_t n = 3 + t % 10;
        const WeightedGraph wg(gen_random(n, 1 + t % 5, 6, rng()), random_weights(n, rng));
        for (auto run : {max_clique_c3, max_clique_c4, max_clique_c6}) {
            for (bool verify : {false, true}) {
                const auto r = run(wg, verify);
                if (!has_result(r)) continue;
                const auto& c = std::get<CliqueResult>(r);
                ASSERT_TRUE(is_clique(wg.graph, c.clique));
                ASSERT_EQ(wg.weight_of(c.clique), c.weight);
                if (verify) ASSERT_EQ(c.weight, oracle::max_clique_weight(wg.graph, wg.weights));
            }
        }
    }
}

TEST(Coloring, GreedyExamples) {
    std::vector<Vertex> perm{0, 1, 2, 3};
    do {
        EXPECT_EQ(greedy_color(k(4), VertexOrdering(perm)).count, 4);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<Vertex> five{0, 1, 2, 3, 4};
    do {
        const auto c = greedy_color(oracle::cycle_graph(5), VertexOrdering(five));
        EXPECT_LE(c.count, 3);
        EXPECT_TRUE(is_proper_coloring(oracle::cycle_graph(5), c));
    } while (std::next_permutation(five.begin(), five.end()));
}

TEST(Coloring, ChordalUsesOmega) {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 200; ++t) {
        const Graph g = gen_chordal(1 + t % 30, 1 + t % 3, 3, rng());
        const auto r = color_chordal(g);
        ASSERT_TRUE(has_result(r));
        const auto& c = std::get<Coloring>(r);
        ASSERT_TRUE(is_proper_coloring(g, c));
        ASSERT_EQ(c.count, oracle::clique_number(g));
    }
    EXPECT_FALSE(has_result(color_chordal(oracle::cycle_graph(5))));
}

TEST(Coloring, UniversallySignableExamples) {
    const auto c6 = color_universally_signable(oracle::cycle_graph(6));
    ASSERT_TRUE(has_result(c6));
    EXPECT_EQ(std::get<Coloring>(c6).count, 2);
    EXPECT_EQ(std::get<Coloring>(color_universally_signable(oracle::cycle_graph(5))).count, 3);
    EXPECT_EQ(std::get<Coloring>(color_universally_signable(k(4))).count, 4);
    const auto w = color_universally_signable(oracle::wheel_graph(5, 0b11111));
    ASSERT_FALSE(has_result(w));
    EXPECT_EQ(std::get<Certificate>(w).kind, CertificateKind::NotInC7);
}

TEST(Coloring, BoundsOnClassMembers) {
    for (Seed s = 0; s < 150; ++s) {
        const std::size_t n = 4 + s % 7;
        if (auto g = sample_class(ClassId::C7, n, 1 + s % 3, 4, s * 7919, 200)) {
            const auto r = color_universally_signable(*g);
            ASSERT_TRUE(has_result(r));
            const auto& c = std::get<Coloring>(r);
            ASSERT_TRUE(is_proper_coloring(*g, c));
            ASSERT_LE(c.count, std::max(3, oracle::clique_number(*g)));
        }
        for (ClassId cls : {ClassId::C4, ClassId::C5}) {
            if (auto g = sample_class(cls, n, 1 + s % 3, 4, s * 104729, 200)) {
                const auto c = greedy_color(*g, lexbfs(*g, 0));
                ASSERT_TRUE(is_proper_coloring(*g, c));
                ASSERT_LE(c.count, 2 * oracle::clique_number(*g) - 1);
            }
        }
    }
}

TEST(SimplicialOrDegree2, Examples) {
    const auto c5 = find_simplicial_or_degree2(oracle::cycle_graph(5));
    ASSERT_TRUE(has_result(c5));
    EXPECT_EQ(std::get<TaggedVertex>(c5).tag, VertexTag::Degree2);
    const auto k4 = find_simplicial_or_degree2(k(4));
    ASSERT_TRUE(has_result(k4));
    EXPECT_EQ(std::get<TaggedVertex>(k4).tag, VertexTag::Simplicial);
    const auto path = find_simplicial_or_degree2(p4());
    ASSERT_TRUE(has_result(path));
    const auto tv = std::get<TaggedVertex>(path);
    EXPECT_EQ(tv.tag, VertexTag::Simplicial);
    EXPECT_TRUE(tv.vertex == 0 || tv.vertex == 3);
    // A universal wheel's last LexBFS vertex sees three or more rim vertices.
    const auto w = find_simplicial_or_degree2(build_graph(4, {{0, 1}, {0, 2}, {0, 3}}));
    EXPECT_TRUE(has_result(w));
}

TEST(SimplicialOrDegree2, C7Members) {
    for (Seed s = 0; s < 200; ++s) {
        const auto g = sample_class(ClassId::C7, 3 + s % 8, 1 + s % 3, 4, s * 31, 200);
        if (!g) continue;
        const auto r = find_simplicial_or_degree2(*g);
        ASSERT_TRUE(has_result(r));
        const auto tv = std::get<TaggedVertex>(r);
        const auto nb = g->neighbors(tv.vertex);
        if (tv.tag == VertexTag::Simplicial) {
            ASSERT_TRUE(is_clique(*g, VertexSet(nb.begin(), nb.end())));
        } else {
            ASSERT_EQ(nb.size(), 2u);
        }
    }
}

TEST(MaximalCliques, Examples) {
    const auto p = enumerate_maximal_cliques_3wf(p4());
    ASSERT_TRUE(has_result(p));
    EXPECT_EQ(std::get<std::vector<VertexSet>>(p), (std::vector<VertexSet>{{0, 1}, {1, 2}, {2, 3}}));
    EXPECT_EQ(std::get<std::vector<VertexSet>>(enumerate_maximal_cliques_3wf(oracle::cycle_graph(5))).size(), 5u);
    EXPECT_EQ(std::get<std::vector<VertexSet>>(enumerate_maximal_cliques_3wf(k(3))),
              (std::vector<VertexSet>{{0, 1, 2}}));
}

TEST(MaximalCliques, MatchOracleOnThreeWheelFreeGraphs) {
    int checked = 0;
    for (Seed s = 0; s < 400; ++s) {
        const std::size_t n = 1 + s % 10;
        const Graph g = gen_random(n, 1 + s % 4, 6, s);
        if (!in_class(g, ClassId::C2).member) continue;
        ++checked;
        const auto r = enumerate_maximal_cliques_3wf(g);
        ASSERT_TRUE(has_result(r));
        const auto& list = std::get<std::vector<VertexSet>>(r);
        auto expected = oracle::maximal_cliques(g);
        std::sort(expected.begin(), expected.end());
        ASSERT_EQ(list, expected);
        // Each isolated vertex is a maximal clique with no edge to pay for it.
        std::size_t isolated = 0;
        for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) isolated += g.degree(v) == 0 ? 1 : 0;
        ASSERT_LE(list.size(), g.size() + isolated);
    }
    EXPECT_GT(checked, 100);
}
