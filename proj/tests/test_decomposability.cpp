#include <gtest/gtest.h>

#include <random>

#include "lexelim/chordal.hpp"
#include "lexelim/decomposability.hpp"
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

// C6 on 0..5 plus vertex 6 joined to 0, 2, 4.
Graph c6_with_center() {
    return build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {6, 0}, {6, 2}, {6, 4}});
}

struct Named {
    NamedFamily family;
    unsigned bits;
    int row;
};

constexpr Named kNamed[] = {
    {NamedFamily::S3, oracle::kS3, 1},
    {NamedFamily::P3, oracle::kP3, 2},
    {NamedFamily::P3bar, oracle::kP3bar, 3},
    {NamedFamily::S3P3, oracle::kS3 | oracle::kP3, 4},
    {NamedFamily::S3P3bar, oracle::kS3 | oracle::kP3bar, 5},
    {NamedFamily::P3P3bar, oracle::kP3 | oracle::kP3bar, 6},
    {NamedFamily::S3P3P3bar, oracle::kS3 | oracle::kP3 | oracle::kP3bar, 7},
    {NamedFamily::S2, oracle::kS2, 8},
};

oracle::Mask all_of(const Graph& g) { return (oracle::Mask{1} << g.order()) - 1; }

}  // namespace

TEST(PatternFamily, NamedFamilies) {
    for (const Named& f : kNamed) {
        const auto fam = PatternFamily::named(f.family);
        EXPECT_EQ(fam.structure_row(), f.row);
        EXPECT_FALSE(fam.infinite());
    }
    EXPECT_TRUE(PatternFamily::named(NamedFamily::Holes).holes());
    EXPECT_TRUE(PatternFamily::named(NamedFamily::LongHoles).long_holes());
    EXPECT_THROW(PatternFamily::custom({oracle::cycle_graph(5)}), Error);
    EXPECT_EQ(family_for(ClassId::C8)->structure_row(), 8);
    EXPECT_EQ(family_for(ClassId::C4)->structure_row(), 4);
    EXPECT_TRUE(family_for(ClassId::FourHoleFreeOddSignable)->holes());
    EXPECT_TRUE(family_for(ClassId::SquareThetaFreeEvenSignable)->long_holes());
    EXPECT_FALSE(family_for(ClassId::OddSignable));
}

TEST(FFree, Examples) {
    EXPECT_TRUE(is_F_free(k(5), PatternFamily::named(NamedFamily::S2)));
    const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(find_F_copy(p3, PatternFamily::named(NamedFamily::P3)), (VertexSet{0, 1, 2}));
    const auto hole = find_F_copy(oracle::cycle_graph(4), PatternFamily::named(NamedFamily::Holes));
    ASSERT_TRUE(hole);
    EXPECT_EQ(VertexSet(hole->begin(), hole->end()).size(), 4u);
    EXPECT_TRUE(is_F_free(oracle::cycle_graph(4), PatternFamily::named(NamedFamily::LongHoles)));
    EXPECT_FALSE(is_F_free(oracle::cycle_graph(5), PatternFamily::named(NamedFamily::LongHoles)));
    EXPECT_THROW(is_F_free(gen_random(20, 1, 2, 3), PatternFamily::named(NamedFamily::LongHoles), 16), Error);
    // Holes is decided by chordal recognition at any size.
    EXPECT_TRUE(is_F_free(gen_chordal(300, 1, 2, 9), PatternFamily::named(NamedFamily::Holes)));
}

TEST(FFree, CustomFamilyMatchesIsomorphicCopies) {
    const auto claw = PatternFamily::custom({build_graph(4, {{0, 1}, {0, 2}, {0, 3}})}, "claw");
    EXPECT_FALSE(is_F_free(build_graph(5, {{4, 1}, {4, 2}, {4, 3}, {0, 1}}), claw));
    EXPECT_TRUE(is_F_free(oracle::cycle_graph(6), claw));
    const auto empty = PatternFamily::custom({});
    EXPECT_TRUE(is_F_free(oracle::cycle_graph(6), empty));
}

TEST(FFree, AgreesWithSubsetOracle) {
    for (int n = 1; n <= 5; ++n) {
        oracle::for_each_labeled_graph(n, [&](const Graph& g) {
            for (const Named& f : kNamed) {
                ASSERT_EQ(is_F_free(g, PatternFamily::named(f.family)),
                          !oracle::contains_member(g, all_of(g), f.bits));
            }
            ASSERT_EQ(is_F_free(g, PatternFamily::named(NamedFamily::LongHoles)),
                      !oracle::contains_member(g, all_of(g), oracle::kLongHole));
        });
    }
}

TEST(Structure, Examples) {
    const Graph k4 = k(4);
    const auto s = neighborhood_structure(k4, 0);
    for (int row = 1; row <= 8; ++row) EXPECT_TRUE(s.row(row)) << row;

    // Center joined to two disjoint triangles.
    const Graph two_triangles =
        build_graph(7, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {6, 0}, {6, 1}, {6, 2}, {6, 3}, {6, 4}, {6, 5}});
    const auto t = neighborhood_structure(two_triangles, 6);
    EXPECT_TRUE(t.union_of_cliques);
    EXPECT_TRUE(t.at_most_two_cliques);
    EXPECT_FALSE(t.clique);

    const auto w = neighborhood_structure(oracle::wheel_graph(4, 0b1111), 4);
    EXPECT_TRUE(w.complete_multipartite);
    EXPECT_FALSE(w.union_of_cliques);
    EXPECT_TRUE(w.multipartite_small_parts);
}

TEST(Structure, EachRowIsEquivalentToFreeness) {
    for (int n = 0; n <= 6; ++n) {
        oracle::for_each_labeled_graph(n, [&](const Graph& g) {
            std::vector<Vertex> all(g.order());
            std::iota(all.begin(), all.end(), 0);
            const auto s = structure_of(g, all);
            for (const Named& f : kNamed) {
                ASSERT_EQ(s.row(f.row), !oracle::contains_member(g, all_of(g), f.bits)) << f.row;
            }
        });
    }
}

TEST(Decomposability, Examples) {
    for (const Named& f : kNamed) EXPECT_TRUE(is_locally_F_decomposable(k(6), PatternFamily::named(f.family)));

    const Graph c4 = oracle::cycle_graph(4);
    const auto s2 = PatternFamily::named(NamedFamily::S2);
    const auto ce = find_decomposability_violation(c4, s2);
    ASSERT_TRUE(ce);
    EXPECT_EQ(ce->vertex, 0);
    EXPECT_EQ(ce->copy, (VertexSet{1, 3}));
    EXPECT_EQ(ce->component, (VertexSet{2}));
    EXPECT_TRUE(verify_counterexample(c4, s2, *ce));

    const Graph w = c6_with_center();
    const auto s3 = PatternFamily::named(NamedFamily::S3);
    const auto cw = find_decomposability_violation(w, s3);
    ASSERT_TRUE(cw);
    // The triple at the center is not a violation: each component of G - N[6]
    // is a single rim vertex seeing two of the three spokes. Vertex 0 is.
    EXPECT_EQ(cw->vertex, 0);
    EXPECT_EQ(cw->copy, (VertexSet{1, 5, 6}));
    EXPECT_TRUE(verify_counterexample(w, s3, *cw));
}

TEST(Decomposability, TamperedCounterexampleRejected) {
    const Graph c4 = oracle::cycle_graph(4);
    const auto s2 = PatternFamily::named(NamedFamily::S2);
    auto ce = *find_decomposability_violation(c4, s2);
    ce.copy = {1, 2};
    EXPECT_FALSE(verify_counterexample(c4, s2, ce));
    ce = *find_decomposability_violation(c4, s2);
    ce.component = {0};
    EXPECT_FALSE(verify_counterexample(c4, s2, ce));
}

TEST(Decomposability, MatchesDefinitionOracle) {
    for (int n = 1; n <= 6; ++n) {
        oracle::for_each_labeled_graph(n, [&](const Graph& g) {
            for (const Named& f : kNamed) {
                const auto fam = PatternFamily::named(f.family);
                const auto ce = find_decomposability_violation(g, fam);
                ASSERT_EQ(!ce, oracle::locally_decomposable(g, f.bits)) << f.row;
                if (ce) ASSERT_TRUE(verify_counterexample(g, fam, *ce));
            }
        });
    }
}

TEST(Decomposability, HoleFamiliesMatchDefinitionOracle) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 400; ++t) {
        const Graph g = gen_random(7 + t % 2, 1 + t % 4, 6, rng());
        ASSERT_EQ(is_locally_F_decomposable(g, PatternFamily::named(NamedFamily::Holes)),
                  oracle::locally_decomposable(g, oracle::kHole));
        ASSERT_EQ(is_locally_F_decomposable(g, PatternFamily::named(NamedFamily::LongHoles)),
                  oracle::locally_decomposable(g, oracle::kLongHole));
    }
}

TEST(Decomposability, ChordalEquivalence) {
    for (int n = 1; n <= 6; ++n) {
        oracle::for_each_labeled_graph(n, [&](const Graph& g) {
            ASSERT_EQ(oracle::locally_decomposable(g, oracle::kS2), oracle::chordal_by_subsets(g));
        });
    }
}

TEST(Decomposability, ConfigurationEquivalences) {
    const oracle::ConfigurationOracle o(6);
    for (int n = 1; n <= 6; ++n) {
        oracle::for_each_labeled_graph(n, [&](const Graph& g) {
            const bool one_theta_pyramid =
                o.one_wheel.contained_in(g) || o.theta.contained_in(g) || o.pyramid.contained_in(g);
            ASSERT_EQ(oracle::locally_decomposable(g, oracle::kS3), !one_theta_pyramid);
            ASSERT_EQ(oracle::locally_decomposable(g, oracle::kP3), !o.three_wheel.contained_in(g));
            const bool two_prism_pyramid =
                o.two_wheel.contained_in(g) || o.prism.contained_in(g) || o.pyramid.contained_in(g);
            ASSERT_EQ(oracle::locally_decomposable(g, oracle::kP3bar), !two_prism_pyramid);
        });
    }
}

TEST(Decomposability, UnionOfFamilies) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 1500; ++t) {
        const Graph g = gen_random(7, 1 + t % 5, 6, rng());
        const auto dec = [&](NamedFamily f) { return is_locally_F_decomposable(g, PatternFamily::named(f)); };
        const bool s3 = dec(NamedFamily::S3), p3 = dec(NamedFamily::P3), p3bar = dec(NamedFamily::P3bar);
        ASSERT_EQ(dec(NamedFamily::S3P3), s3 && p3);
        ASSERT_EQ(dec(NamedFamily::S3P3bar), s3 && p3bar);
        ASSERT_EQ(dec(NamedFamily::P3P3bar), p3 && p3bar);
        ASSERT_EQ(dec(NamedFamily::S3P3P3bar), s3 && p3 && p3bar);
    }
}

TEST(Decomposability, Hereditary) {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 300; ++t) {
        const Graph g = gen_random(8, 1 + t % 5, 6, rng());
        for (const Named& f : kNamed) {
            const auto fam = PatternFamily::named(f.family);
            if (!is_locally_F_decomposable(g, fam)) continue;
            for (Vertex drop = 0; drop < 8; ++drop) {
                std::vector<Vertex> keep;
                for (Vertex v = 0; v < 8; ++v)
                    if (v != drop) keep.push_back(v);
                ASSERT_TRUE(is_locally_F_decomposable(induced_subgraph(g, keep).graph, fam));
            }
        }
    }
}

TEST(Decomposability, HoleClassesAreDecomposable) {
    std::mt19937_64 rng(31);
    int odd = 0, even = 0;
    for (int t = 0; t < 3000; ++t) {
        const Graph g = gen_random(8, 1 + t % 4, 7, rng());
        if (in_class(g, ClassId::FourHoleFreeOddSignable).member) {
            ++odd;
            ASSERT_TRUE(oracle::locally_decomposable(g, oracle::kHole));
        }
        if (in_class(g, ClassId::SquareThetaFreeEvenSignable).member) {
            ++even;
            ASSERT_TRUE(oracle::locally_decomposable(g, oracle::kLongHole));
        }
    }
    EXPECT_GT(odd, 100);
    EXPECT_GT(even, 100);
}
