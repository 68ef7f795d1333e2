#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "lexelim/configurations.hpp"
#include "lexelim/graph.hpp"

namespace lexelim {

using Seed = std::uint64_t;

// All generators draw from std::mt19937_64 seeded with the given seed.
// Probabilities are exact rationals num/den: a 64-bit draw x passes when
// floor(x * den / 2^64) < num.

/// Erdos-Renyi graph; pairs (u, v), u < v, are drawn in lexicographic order.
/// Throws InvalidParameter unless 0 <= num <= den and den > 0.
Graph gen_random(std::size_t n, std::uint64_t num, std::uint64_t den, Seed seed);

/// Chordal graph built by simplicial insertion: vertex i picks a random
/// earlier vertex u and joins a random subset of the clique u was attached
/// to (plus u itself), each member kept with probability density_num/density_den.
Graph gen_chordal(std::size_t n, std::uint64_t density_num, std::uint64_t density_den, Seed seed);

struct ConfigParams {
    ConfigKind kind = ConfigKind::Theta;
    /// Path lengths (edges) for Theta, Prism and Pyramid.
    std::array<std::size_t, 3> lengths{2, 2, 2};
    /// Rim length and the rim positions adjacent to the center for Wheel.
    std::size_t rim = 0;
    std::vector<std::size_t> spokes;
};

struct GeneratedConfiguration {
    Graph graph;
    std::vector<VertexRole> roles;
};

/// Builds a theta, prism, pyramid, wheel or hole (rim = length) exactly.
/// Theta needs every path of length >= 2; prism every length >= 1; pyramid
/// at most one length 1; wheel rim >= 4 and >= 3 distinct spokes; hole
/// rim >= 4. Violations throw InvalidParameter.
GeneratedConfiguration gen_configuration(const ConfigParams& params);

inline constexpr std::size_t kDefaultSampleAttempts = 10000;

/// Rejection sampling of gen_random graphs until in_class accepts. The i-th
/// attempt uses seed + i. nullopt when attempts run out.
std::optional<Graph> sample_class(ClassId c, std::size_t n, std::uint64_t num, std::uint64_t den,
                                  Seed seed, std::size_t attempts = kDefaultSampleAttempts);

}  // namespace lexelim
