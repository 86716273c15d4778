#pragma once

#include <span>
#include <variant>
#include <vector>

namespace convexgeo {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kDefaultTol = 1e-7;
inline constexpr int kDefaultSamples = 4096;

struct Vec2 {
    double x = 0;
    double y = 0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double k, Vec2 a) { return {k * a.x, k * a.y}; }
    friend bool operator==(Vec2, Vec2) = default;
};

double dot(Vec2 a, Vec2 b);
double cross(Vec2 a, Vec2 b);
double norm(Vec2 a);
Vec2 unit(double angle);

// Closed disk; r = 0 is a point.
struct Disk {
    double cx = 0;
    double cy = 0;
    double r = 0;
    friend bool operator==(const Disk&, const Disk&) = default;
};

// Closed ellipse with semi-axes a >= b > 0; the a-axis points at angle theta.
struct EllipseBody {
    double cx = 0;
    double cy = 0;
    double a = 1;
    double b = 1;
    double theta = 0;
    friend bool operator==(const EllipseBody&, const EllipseBody&) = default;
};

using SupportBody = std::variant<Disk, EllipseBody>;

// Throws InputError when a field is non-finite or violates the axis rules.
void validate(const SupportBody& body);

Vec2 center(const SupportBody& body);
bool is_point(const SupportBody& body);

// h(u) = max over the body of p.u for u = (cos angle, sin angle).
double support(const SupportBody& body, double angle);
double support(const SupportBody& body, Vec2 u);

struct Box {
    double xmin, ymin, xmax, ymax;
};
Box bounds(const SupportBody& body);
Box bounds(std::span<const SupportBody> bodies);

// Diagonal of the joint bounding box; 1 when every body is one point.
double extent_scale(std::span<const SupportBody> bodies);

// Minimum over directions of max_i h_i - h_x. Non-negative iff x lies in
// the convex hull of `hull`, up to the sampling resolution. Throws
// InputError on an empty hull.
double hull_margin(const SupportBody& x, std::span<const SupportBody> hull, int samples = kDefaultSamples);

// x is contained in CH(hull) when hull_margin >= -tol * scale, with scale the
// extent of x and the hull bodies together.
bool body_in_hull(const SupportBody& x, std::span<const SupportBody> hull, double tol = kDefaultTol);
// Same with the caller's scale.
bool body_in_hull(const SupportBody& x, std::span<const SupportBody> hull, double tol, double scale);

}  // namespace convexgeo
