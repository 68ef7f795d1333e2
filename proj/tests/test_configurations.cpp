#include <gtest/gtest.h>

#include <random>

#include "lexelim/chordal.hpp"
#include "lexelim/configurations.hpp"
#include "lexelim/generators.hpp"
#include "oracles.hpp"

using namespace lexelim;

namespace {

Graph k23() { return build_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return build_graph(10, e);
}

Graph k(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return build_graph(static_cast<std::size_t>(n), e);
}

KindSet truemper_view(KindSet s) {
    return s & KindSet{ConfigKind::Hole,     ConfigKind::Theta,      ConfigKind::SquareTheta,
                       ConfigKind::Prism,    ConfigKind::Pyramid,    ConfigKind::Wheel,
                       ConfigKind::OneWheel, ConfigKind::TwoWheel,   ConfigKind::ThreeWheel,
                       ConfigKind::UniversalWheel, ConfigKind::EvenWheel, ConfigKind::OddWheel};
}

}  // namespace

TEST(ConfigKindNames, RoundTrip) {
    for (ConfigKind k : kAllConfigKinds) EXPECT_EQ(parse_config_kind(to_string(k)), k);
    EXPECT_EQ(parse_config_kind("theta"), ConfigKind::Theta);
    EXPECT_FALSE(parse_config_kind("nope"));
    for (ClassId c : kAllClasses) EXPECT_EQ(parse_class_id(to_string(c)), c);
    EXPECT_EQ(parse_class_id("chordal"), ClassId::C8);
}

TEST(Classify, Examples) {
    EXPECT_EQ(truemper_view(classify_configuration(k23())), (KindSet{ConfigKind::Theta, ConfigKind::SquareTheta}));
    const Graph prism = build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
    EXPECT_EQ(truemper_view(classify_configuration(prism)), KindSet{ConfigKind::Prism});
    const Graph w4 = oracle::wheel_graph(4, 0b1111);
    EXPECT_EQ(truemper_view(classify_configuration(w4)),
              (KindSet{ConfigKind::Wheel, ConfigKind::ThreeWheel, ConfigKind::UniversalWheel, ConfigKind::EvenWheel}));
    const Graph c5 = oracle::cycle_graph(5);
    const KindSet hole = classify_configuration(c5);
    EXPECT_TRUE(hole.contains(ConfigKind::Hole));
    EXPECT_TRUE(hole.contains(ConfigKind::LongHole));
    EXPECT_FALSE(hole.contains(ConfigKind::EvenHole));
    EXPECT_FALSE(hole.contains(ConfigKind::FourHole));
    EXPECT_TRUE(classify_configuration(oracle::cycle_graph(4)).contains(ConfigKind::FourHole));
    EXPECT_TRUE(classify_configuration(oracle::cycle_graph(6)).contains(ConfigKind::EvenHole));
}

TEST(Classify, SmallPatterns) {
    EXPECT_TRUE(classify_configuration(build_graph(2, {})).contains(ConfigKind::S2));
    EXPECT_TRUE(classify_configuration(build_graph(3, {})).contains(ConfigKind::S3));
    EXPECT_TRUE(classify_configuration(build_graph(3, {{0, 1}, {1, 2}})).contains(ConfigKind::P3));
    EXPECT_TRUE(classify_configuration(build_graph(3, {{0, 1}})).contains(ConfigKind::P3bar));
    EXPECT_TRUE(classify_configuration(build_graph(4, {{0, 1}, {0, 2}, {0, 3}})).contains(ConfigKind::Claw));
    EXPECT_TRUE(classify_configuration(build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})).contains(ConfigKind::Diamond));
    // Cap: a 4-hole plus a vertex on one rim edge.
    EXPECT_TRUE(classify_configuration(build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}}))
                    .contains(ConfigKind::Cap));
}

TEST(Classify, DHoleIsThreeWheelWithThreeSpokes) {
    const Graph w = oracle::wheel_graph(5, 0b00111);
    const KindSet s = classify_configuration(w);
    EXPECT_TRUE(s.contains(ConfigKind::DHole));
    EXPECT_TRUE(s.contains(ConfigKind::ThreeWheel));
    EXPECT_FALSE(classify_configuration(oracle::wheel_graph(5, 0b01111)).contains(ConfigKind::DHole));
}

TEST(Classify, WheelTraitsMatchDefinitions) {
    for (int rim = 4; rim <= 8; ++rim) {
        for (oracle::Mask sp = 0; sp < (oracle::Mask{1} << rim); ++sp) {
            if (std::popcount(sp) < 3) continue;
            const Graph w = oracle::wheel_graph(rim, sp);
            const auto t = oracle::wheel_traits(rim, sp);
            const KindSet s = classify_configuration(w);
            ASSERT_TRUE(s.contains(ConfigKind::Wheel));
            // K4-like rim+center of size 5 with 4 spokes is a wheel in more
            // than one way; only compare when the rim is unambiguous.
            if (rim == 4 && std::popcount(sp) == 4) continue;
            ASSERT_EQ(s.contains(ConfigKind::OneWheel), t.one) << rim << ' ' << sp;
            ASSERT_EQ(s.contains(ConfigKind::TwoWheel), t.two) << rim << ' ' << sp;
            ASSERT_EQ(s.contains(ConfigKind::ThreeWheel), t.three) << rim << ' ' << sp;
            ASSERT_EQ(s.contains(ConfigKind::UniversalWheel), t.universal);
            ASSERT_EQ(s.contains(ConfigKind::EvenWheel), t.even);
            ASSERT_EQ(s.contains(ConfigKind::OddWheel), t.odd);
            // Every wheel is a 1-, 2- or 3-wheel; every 3-wheel is a 2-wheel or universal.
            ASSERT_TRUE(t.one || t.two || t.three);
            if (t.three) ASSERT_TRUE(t.two || t.universal);
        }
    }
}

TEST(WheelSectors, Examples) {
    EXPECT_EQ(wheel_sectors(oracle::wheel_graph(6, 0b010101), 6), (std::vector<std::size_t>{2, 2, 2}));
    EXPECT_EQ(wheel_sectors(oracle::wheel_graph(5, 0b11111), 5), (std::vector<std::size_t>(5, 1)));
    EXPECT_EQ(wheel_sectors(oracle::wheel_graph(4, 0b1111), 4), (std::vector<std::size_t>(4, 1)));
    EXPECT_THROW(wheel_sectors(oracle::cycle_graph(5), 0), Error);
    EXPECT_THROW(wheel_sectors(oracle::wheel_graph(6, 0b000101), 6), Error);
}

TEST(WheelSectors, SumAndCount) {
    const auto s = wheel_sectors(oracle::wheel_graph(7, 0b1001011), 7);
    EXPECT_EQ(s.size(), 4u);
    EXPECT_EQ(std::accumulate(s.begin(), s.end(), std::size_t{0}), 7u);
}

TEST(Contains, Examples) {
    const Graph c5 = oracle::cycle_graph(5);
    const auto w = contains_configuration(c5, ConfigKind::Hole);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->vertices, (VertexSet{0, 1, 2, 3, 4}));
    for (ConfigKind kind : kAllConfigKinds) {
        if (kind == ConfigKind::Diamond) continue;
        if (kind == ConfigKind::Hole || kind == ConfigKind::Theta || kind == ConfigKind::Wheel ||
            kind == ConfigKind::Prism || kind == ConfigKind::Pyramid) {
            EXPECT_FALSE(contains_configuration(k(4), kind));
        }
    }
    EXPECT_TRUE(contains_configuration(petersen(), ConfigKind::Theta));
    EXPECT_THROW(contains_configuration(gen_random(17, 1, 2, 1), ConfigKind::Theta), Error);
}

TEST(Contains, WitnessesClassifyAndCarryRoles) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 150; ++t) {
        const Graph g = gen_random(8, 2, 5, rng());
        for (ConfigKind kind : kAllConfigKinds) {
            const auto w = contains_configuration(g, kind);
            if (!w) continue;
            const auto sub = induced_subgraph(g, w->vertices);
            const KindSet s = classify_configuration(sub.graph);
            ASSERT_TRUE(s.contains(kind));
            if (s.contains(ConfigKind::SquareTheta)) ASSERT_TRUE(s.contains(ConfigKind::Theta));
            for (ConfigKind h : {ConfigKind::FourHole, ConfigKind::LongHole, ConfigKind::EvenHole}) {
                if (s.contains(h)) ASSERT_TRUE(s.contains(ConfigKind::Hole));
            }
            if (kind == ConfigKind::Wheel || kind == ConfigKind::Theta || kind == ConfigKind::Prism ||
                kind == ConfigKind::Pyramid || kind == ConfigKind::Hole) {
                ASSERT_EQ(w->roles.size(), w->vertices.size());
            }
        }
    }
}

TEST(Contains, AgreesWithSubsetSearch) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        const Graph g = gen_random(7 + t % 3, 1 + t % 3, 5, rng());
        for (ConfigKind kind : kAllConfigKinds) {
            const auto a = contains_configuration(g, kind);
            const auto b = find_configuration_by_subsets(g, KindSet{kind});
            ASSERT_EQ(a.has_value(), b.has_value()) << to_string(kind);
            if (a) ASSERT_EQ(a->vertices, b->vertices) << to_string(kind);
        }
    }
}

TEST(Contains, HoleAgreesWithSubsetOracleAndChordality) {
    for (int n = 1; n <= 6; ++n) {
        oracle::for_each_labeled_graph(n, [&](const Graph& g) {
            const bool has = contains_configuration(g, ConfigKind::Hole).has_value();
            ASSERT_EQ(has, !oracle::chordal_by_subsets(g));
            ASSERT_EQ(has, !is_chordal(g));
        });
    }
    std::mt19937_64 rng(3);
    for (int t = 0; t < 2000; ++t) {
        const Graph g = gen_random(8, 1 + t % 4, 6, rng());
        ASSERT_EQ(contains_configuration(g, ConfigKind::Hole).has_value(), !is_chordal(g));
    }
}

TEST(Contains, TruemperKindsAgreeWithIsomorphismOracle) {
    const oracle::ConfigurationOracle o(7);
    std::mt19937_64 rng(17);
    for (int t = 0; t < 400; ++t) {
        const Graph g = gen_random(7, 1 + t % 4, 6, rng());
        ASSERT_EQ(contains_configuration(g, ConfigKind::Theta).has_value(), o.theta.contained_in(g));
        ASSERT_EQ(contains_configuration(g, ConfigKind::Pyramid).has_value(), o.pyramid.contained_in(g));
        ASSERT_EQ(contains_configuration(g, ConfigKind::Prism).has_value(), o.prism.contained_in(g));
        ASSERT_EQ(contains_configuration(g, ConfigKind::Wheel).has_value(), o.wheel.contained_in(g));
        ASSERT_EQ(contains_configuration(g, ConfigKind::OneWheel).has_value(), o.one_wheel.contained_in(g));
        ASSERT_EQ(contains_configuration(g, ConfigKind::TwoWheel).has_value(), o.two_wheel.contained_in(g));
        ASSERT_EQ(contains_configuration(g, ConfigKind::ThreeWheel).has_value(), o.three_wheel.contained_in(g));
        ASSERT_EQ(contains_configuration(g, ConfigKind::EvenWheel).has_value(), o.even_wheel.contained_in(g));
        ASSERT_EQ(contains_configuration(g, ConfigKind::OddWheel).has_value(), o.odd_wheel.contained_in(g));
    }
}

TEST(InClass, Examples) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 30; ++t) {
        const Graph g = gen_chordal(25, 2, 3, rng());
        for (ClassId c : kAllClasses) EXPECT_TRUE(in_class(g, c).member);
    }
    const Graph w = oracle::wheel_graph(6, 0b010101);
    const auto m = in_class(w, ClassId::C1);
    EXPECT_FALSE(m.member);
    ASSERT_TRUE(m.witness);
    EXPECT_TRUE(forbidden_kinds(ClassId::C1).contains(m.witness->kind));
    // Triangle-free graphs avoid every C3 obstruction.
    EXPECT_TRUE(in_class(oracle::cycle_graph(6), ClassId::C3).member);
    EXPECT_TRUE(in_class(petersen(), ClassId::C3).member);
}

TEST(InClass, ForbiddenKindsTable) {
    using K = ConfigKind;
    EXPECT_EQ(forbidden_kinds(ClassId::C1), (KindSet{K::OneWheel, K::Theta, K::Pyramid}));
    EXPECT_EQ(forbidden_kinds(ClassId::C2), (KindSet{K::ThreeWheel}));
    EXPECT_EQ(forbidden_kinds(ClassId::C3), (KindSet{K::TwoWheel, K::Prism, K::Pyramid}));
    EXPECT_EQ(forbidden_kinds(ClassId::C7), (KindSet{K::Wheel, K::Prism, K::Theta, K::Pyramid}));
    EXPECT_EQ(forbidden_kinds(ClassId::C8), (KindSet{K::Hole}));
    EXPECT_EQ(forbidden_kinds(ClassId::OddSignable), (KindSet{K::Theta, K::Prism, K::EvenWheel}));
    EXPECT_EQ(forbidden_kinds(ClassId::EvenSignable), (KindSet{K::Pyramid, K::OddWheel}));
}

TEST(GeneratedConfigurations, ClassifyAsTheirKind) {
    for (std::size_t a = 1; a <= 5; ++a)
        for (std::size_t b = 1; b <= 5; ++b)
            for (std::size_t c = 1; c <= 5; ++c) {
                for (ConfigKind kind : {ConfigKind::Theta, ConfigKind::Prism, ConfigKind::Pyramid}) {
                    ConfigParams p{kind, {a, b, c}, 0, {}};
                    try {
                        const auto g = gen_configuration(p);
                        if (g.graph.order() > 12) continue;
                        ASSERT_TRUE(classify_configuration(g.graph).contains(kind));
                        const auto roles = configuration_roles(g.graph, kind);
                        ASSERT_TRUE(roles);
                    } catch (const Error& e) {
                        ASSERT_EQ(e.code(), ErrorCode::InvalidParameter);
                    }
                }
            }
}
