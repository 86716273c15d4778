#pragma once

#include <convexgeo/body.hpp>
#include <convexgeo/closure.hpp>

#include <vector>

namespace convexgeo {

// One body per ground label, plus the relative containment tolerance.
struct LabeledConfig {
    GroundSet ground;
    std::vector<SupportBody> bodies;  // bodies[e] belongs to element e
    double tol = kDefaultTol;

    const SupportBody& body(Element e) const { return bodies.at(static_cast<std::size_t>(e)); }
    std::vector<SupportBody> bodies_of(ESet y) const;
    // Extent of all bodies together; the unit for tol.
    double scale() const { return extent_scale(bodies); }
};

// Throws InputError when the body count disagrees with the ground set, a
// body is invalid or tol is not positive.
void validate(const LabeledConfig& config);

// {x : body x inside CH(bodies of y)} united with y; ch_c(empty) = empty.
ESet ch_c(const LabeledConfig& config, ESet y);

// ch_c evaluated on every subset.
ClosureTable ch_c_table(const LabeledConfig& config);

struct InducedGeometry {
    Geometry geometry;
    ImplicationBasis basis;  // tight pairs, one element per conclusion
};

// Checks that `table` is a closure operator whose closed sets form a convex
// geometry; throws DegeneracyError naming the first offending subset.
Geometry checked_geometry(const ClosureTable& table);

// Geometry of ch_c and its tight implications. Throws DegeneracyError when
// the numerically induced family is not a convex geometry.
InducedGeometry induced_geometry(const LabeledConfig& config);

}  // namespace convexgeo
