#pragma once

#include <convexgeo/body.hpp>
#include <convexgeo/config.hpp>

#include <string>
#include <vector>

namespace convexgeo {

// Angles on the circle of d, all in [0, 2pi). x0 points from D toward the
// center of x and xinf is antipodal. x1 and x2 are where the two common outer
// tangents touch d, with x1, x0, x2 in counterclockwise order.
struct TangentPoints {
    double x0;
    double x1;
    double x2;
    double xinf;
};

// Throws PreconditionError when d is not a disk of positive radius or when
// either body contains the other.
TangentPoints tangent_points(const Disk& d, const SupportBody& x, double tol = kDefaultTol);

// Counterclockwise arc from `start` of the given length.
struct Arc {
    double start;
    double length;
    bool contains(double angle) const;
};

// Longest piece of the common part of the arcs; 0 when they share no
// interior.
double common_arc_length(const std::vector<Arc>& arcs);

// True when the three angles appear in counterclockwise circular order.
bool ccw_order(double a, double b, double c);

enum class ConfigKind { Config1, Config2, Config3 };

struct ConfigLabel {
    ConfigKind kind;
    int center = -1;     // 0, 1 or 2: position of the center argument
    bool limit = false;  // Config2 at the tangency boundary
    friend bool operator==(const ConfigLabel&, const ConfigLabel&) = default;
};

std::string to_string(const ConfigLabel& label);

// Config1 when one body lies in the hull of the other two. Config2 with
// center w when the hulls of w with each of the others only meet inside w.
// Config3 otherwise. Throws PreconditionError on containment.
ConfigLabel classify_three(const SupportBody& x, const SupportBody& y, const SupportBody& z,
                           double tol = kDefaultTol);

// Strict interior. Throws DegeneracyError when A, B, C are collinear.
bool triangle_interior(Vec2 e, Vec2 a, Vec2 b, Vec2 c);

// C strictly inside the angle vertical to angle AEB. Throws DegeneracyError
// when A or B coincides with E or the rays EA, EB are parallel.
bool opposite_angle(Vec2 a, Vec2 e, Vec2 b, Vec2 c);

struct LabeledAngle {
    std::string name;  // "B1", "C1", ...
    double angle;
};

struct PointOrder {
    // The six touching points sorted counterclockwise starting at B1.
    std::vector<LabeledAngle> order;
    // a and c were swapped to make B0, A0, C0 counterclockwise.
    bool relabeled = false;
    // The order matches B1, C1, A1, B2, C2, A2 (merged points allowed).
    bool conforms = false;
    // Runs of consecutive sequence points that coincide within tolerance.
    std::vector<std::vector<std::string>> merged;
};

// Requires abc->d tight under ch_c and d a disk of positive radius; throws
// PreconditionError otherwise.
PointOrder point_order(const LabeledConfig& config, Element a, Element b, Element c, Element d);

// Q_d(ys) = intersection of CH(d, y) over ys, minus d. Throws
// PreconditionError when |ys| is not 1..3, d is in ys, or bodies contain one
// another.
bool q_region_empty(const LabeledConfig& config, Element d, ESet ys);

}  // namespace convexgeo
