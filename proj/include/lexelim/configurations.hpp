#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexelim/graph.hpp"

namespace lexelim {

enum class ConfigKind : std::uint8_t {
    Hole,
    FourHole,
    LongHole,
    EvenHole,
    Theta,
    SquareTheta,
    Prism,
    Pyramid,
    Wheel,
    OneWheel,
    TwoWheel,
    ThreeWheel,
    UniversalWheel,
    EvenWheel,
    OddWheel,
    DHole,
    Cap,
    Diamond,
    Claw,
    S2,
    S3,
    P3,
    P3bar,
};

inline constexpr std::size_t kConfigKindCount = 23;

inline constexpr std::array<ConfigKind, kConfigKindCount> kAllConfigKinds{
    ConfigKind::Hole,       ConfigKind::FourHole,   ConfigKind::LongHole,
    ConfigKind::EvenHole,   ConfigKind::Theta,      ConfigKind::SquareTheta,
    ConfigKind::Prism,      ConfigKind::Pyramid,    ConfigKind::Wheel,
    ConfigKind::OneWheel,   ConfigKind::TwoWheel,   ConfigKind::ThreeWheel,
    ConfigKind::UniversalWheel, ConfigKind::EvenWheel, ConfigKind::OddWheel,
    ConfigKind::DHole,      ConfigKind::Cap,        ConfigKind::Diamond,
    ConfigKind::Claw,       ConfigKind::S2,         ConfigKind::S3,
    ConfigKind::P3,         ConfigKind::P3bar,
};

std::string_view to_string(ConfigKind kind);
std::optional<ConfigKind> parse_config_kind(std::string_view name);

/// Small set of configuration kinds.
class KindSet {
public:
    constexpr KindSet() = default;
    constexpr KindSet(std::initializer_list<ConfigKind> kinds) {
        for (ConfigKind k : kinds) insert(k);
    }

    constexpr void insert(ConfigKind k) { bits_ |= bit(k); }
    constexpr bool contains(ConfigKind k) const { return (bits_ & bit(k)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool intersects(KindSet other) const { return (bits_ & other.bits_) != 0; }
    constexpr KindSet operator&(KindSet other) const { return KindSet(bits_ & other.bits_); }
    constexpr KindSet operator|(KindSet other) const { return KindSet(bits_ | other.bits_); }
    constexpr bool operator==(const KindSet&) const = default;

    /// Members in enum order.
    std::vector<ConfigKind> members() const;
    std::uint32_t bits() const { return bits_; }

private:
    constexpr explicit KindSet(std::uint32_t bits) : bits_(bits) {}
    static constexpr std::uint32_t bit(ConfigKind k) {
        return std::uint32_t{1} << static_cast<unsigned>(k);
    }
    std::uint32_t bits_ = 0;
};

enum class Role : std::uint8_t { None, Rim, Center, HubX, HubY, Path };

struct VertexRole {
    Vertex vertex = -1;
    Role role = Role::None;
    /// Rim position for Rim, path number (0..2) for Path.
    int index = -1;

    bool operator==(const VertexRole&) const = default;
};

/// An induced subgraph realizing a configuration.
struct ConfigurationWitness {
    ConfigKind kind{};
    VertexSet vertices;
    std::vector<VertexRole> roles;
};

/// Graph classes defined by excluded configurations.
enum class ClassId : std::uint8_t {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    OddSignable,
    EvenSignable,
    EvenHoleFree,
    WheelFree,
    FourHoleFreeOddSignable,
    SquareThetaFreeEvenSignable,
};

inline constexpr ClassId kUniversallySignable = ClassId::C7;
inline constexpr ClassId kChordal = ClassId::C8;

inline constexpr std::array<ClassId, 14> kAllClasses{
    ClassId::C1, ClassId::C2, ClassId::C3, ClassId::C4, ClassId::C5, ClassId::C6, ClassId::C7,
    ClassId::C8, ClassId::OddSignable, ClassId::EvenSignable, ClassId::EvenHoleFree,
    ClassId::WheelFree, ClassId::FourHoleFreeOddSignable, ClassId::SquareThetaFreeEvenSignable,
};

std::string_view to_string(ClassId c);
std::optional<ClassId> parse_class_id(std::string_view name);

/// Configurations whose absence defines the class.
KindSet forbidden_kinds(ClassId c);

inline constexpr std::size_t kDefaultBruteForceCap = 16;

/// Every kind realized by g as a whole.
KindSet classify_configuration(const Graph& g);

/// Role assignment for `kind` on the whole graph, or nullopt when g does not
/// realize it.
std::optional<std::vector<VertexRole>> configuration_roles(const Graph& g, ConfigKind kind);

/// Cyclic sector lengths of the wheel with the given center, starting at the
/// smallest rim neighbor of the center and walking the rim towards the
/// smaller of that vertex's rim neighbors. Throws NotAWheel.
std::vector<std::size_t> wheel_sectors(const Graph& g, Vertex center);

/// First induced subgraph (by size, then lexicographically) realizing `kind`.
/// Hole kinds are found by a chordless-cycle search that returns the same
/// witness. Throws TooLarge when g.order() > cap.
std::optional<ConfigurationWitness> contains_configuration(const Graph& g, ConfigKind kind,
                                                           std::size_t cap = kDefaultBruteForceCap);

/// First induced subgraph realizing any kind in `kinds`; the witness kind is
/// the first of `kinds` (enum order) that subgraph realizes.
std::optional<ConfigurationWitness> find_configuration(const Graph& g, KindSet kinds,
                                                       std::size_t cap = kDefaultBruteForceCap);

/// The same search by plain subset enumeration, with no shortcuts.
std::optional<ConfigurationWitness> find_configuration_by_subsets(
    const Graph& g, KindSet kinds, std::size_t cap = kDefaultBruteForceCap);

struct Membership {
    bool member = true;
    std::optional<ConfigurationWitness> witness;
};

/// Membership by excluded configurations. Chordal graphs are members of
/// every class regardless of size; otherwise throws TooLarge above cap.
Membership in_class(const Graph& g, ClassId c, std::size_t cap = kDefaultBruteForceCap);

/// Chordless cycles of g (each reported once as a vertex sequence starting at
/// its smallest vertex). The callback returns false to stop.
template <class Callback>
void for_each_hole(const Graph& g, Callback&& callback);

/// Canonical first hole (shortest, then lexicographically smallest vertex set)
/// whose length satisfies `accept`.
template <class Accept>
std::optional<std::vector<Vertex>> first_hole(const Graph& g, Accept&& accept);

}  // namespace lexelim

#include "lexelim/detail/holes.hpp"
