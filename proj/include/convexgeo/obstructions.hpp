#pragma once

#include <convexgeo/closure.hpp>
#include <convexgeo/enumerate.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace convexgeo {

enum class ObstructionKind { Opposite, Separation, NestedTriangle, AreaQ };

inline constexpr std::array<ObstructionKind, 4> kAllObstructions{
    ObstructionKind::Opposite, ObstructionKind::Separation, ObstructionKind::NestedTriangle,
    ObstructionKind::AreaQ};

std::string to_string(ObstructionKind kind);

// witness[i] is the element playing role letter 'a' + i.
struct Obstruction {
    ObstructionKind kind;
    std::array<Element, 5> witness;
    friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

// "a=b b=c c=a d=d e=e" in the geometry's labels.
std::string format_witness(const GroundSet& ground, const Obstruction& ob);

// Whether the roles satisfy the kind's pattern under `table`. Roles must be
// distinct elements of the ground set.
bool matches(const ClosureTable& table, ObstructionKind kind, const std::array<Element, 5>& roles);

// First witness in lexicographic order of (a, b, c, d, e), or none. The
// search covers every injective role assignment, so none means the pattern
// is absent.
std::optional<Obstruction> detect(const ClosureTable& table, ObstructionKind kind);
std::optional<Obstruction> detect(const Geometry& g, ObstructionKind kind);

// Tight bcd->e with ab->e, ac->e, ad->e, but not a->e.
std::optional<Obstruction> detect_opposite(const Geometry& g);
// Tight acd->e and bcd->e together with ab->e.
std::optional<Obstruction> detect_separation(const Geometry& g);
// Tight abc->d, abd->e and cbd->e, neither bd->e nor both ad->e and cd->e.
std::optional<Obstruction> detect_nested(const Geometry& g);
// Tight abc->d, ad->e, bd->e and cd->e, but not d->e.
std::optional<Obstruction> detect_area_q(const Geometry& g);

// Every detector run on one geometry; first witness per fired kind.
std::vector<Obstruction> detect_all(const Geometry& g);

struct CatalogEntry {
    std::string id;  // canonical id
    std::vector<Obstruction> fired;
};

struct CatalogReport {
    std::vector<CatalogEntry> entries;  // same order as the input
    std::array<std::size_t, 4> counts{};  // per kind, indexed like kAllObstructions
    std::size_t unobstructed = 0;         // entries where nothing fired
};

CatalogReport classify_catalog(const std::vector<Geometry>& gs);

// One line per obstruction: "<id> <kind> <witness>", or "<id> no obstruction
// found" when no detector fires.
std::string format_catalog(const std::vector<Geometry>& gs, const CatalogReport& report);

}  // namespace convexgeo
