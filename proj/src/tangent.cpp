#include <convexgeo/tangent.hpp>

#include <convexgeo/error.hpp>

#include "sampling.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <utility>

namespace convexgeo {

namespace {

using detail::wrap_angle;

double angle_of(Vec2 v) { return wrap_angle(std::atan2(v.y, v.x)); }

template <class F>
double periodic_maximum(const F& f) {
    const auto& grid = detail::DirectionGrid::standard();
    std::vector<double> samples(static_cast<std::size_t>(grid.n));
    for (int k = 0; k < grid.n; ++k) samples[static_cast<std::size_t>(k)] = -f(grid.angle[static_cast<std::size_t>(k)]);
    const auto neg = [&](double a) { return -f(a); };
    return -detail::refine_minimum(neg, samples, grid).value;
}

// The single arc where f > 0, as (entry angle, exit angle) going
// counterclockwise. Throws PreconditionError unless f changes sign exactly
// twice on the grid.
template <class F>
std::pair<double, double> positive_arc(const F& f) {
    const auto& grid = detail::DirectionGrid::standard();
    const int n = grid.n;
    std::vector<char> pos(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) pos[static_cast<std::size_t>(k)] = f(grid.angle[static_cast<std::size_t>(k)]) > 0;
    double up = 0;
    double down = 0;
    int ups = 0;
    int downs = 0;
    for (int k = 0; k < n; ++k) {
        const bool p0 = pos[static_cast<std::size_t>(k)];
        const bool p1 = pos[static_cast<std::size_t>((k + 1) % n)];
        if (p0 == p1) continue;
        double lo = grid.angle[static_cast<std::size_t>(k)];
        double hi = lo + grid.step;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            if ((f(mid) > 0) == p0)
                lo = mid;
            else
                hi = mid;
        }
        const double root = wrap_angle(0.5 * (lo + hi));
        if (p1) {
            up = root;
            ++ups;
        } else {
            down = root;
            ++downs;
        }
    }
    if (ups != 1 || downs != 1)
        throw PreconditionError("support difference does not have exactly two tangent crossings");
    return {up, down};
}

void require_no_containment(std::span<const SupportBody> bodies, double tol) {
    const double scale = extent_scale(bodies);
    for (std::size_t i = 0; i < bodies.size(); ++i)
        for (std::size_t j = 0; j < bodies.size(); ++j)
            if (i != j && body_in_hull(bodies[i], std::span(&bodies[j], 1), tol, scale))
                throw PreconditionError("body " + std::to_string(i) + " is contained in body " + std::to_string(j));
}

// Directions from the point p into the body: the cone spanned by the two
// tangent lines through p.
Arc tangent_cone(Vec2 p, const SupportBody& body) {
    const auto [up, down] = positive_arc([&](double a) { return support(body, a) - dot(p, unit(a)); });
    return Arc{wrap_angle(up + kPi / 2), wrap_angle(down - up) - kPi};
}

// Largest common excess of the bodies `others` over the support of w.
double common_excess(const SupportBody& w, const std::vector<SupportBody>& others) {
    return periodic_maximum([&](double a) {
        const Vec2 u = unit(a);
        const double hw = support(w, u);
        double m = std::numeric_limits<double>::infinity();
        for (const auto& o : others) m = std::min(m, support(o, u) - hw);
        return m;
    });
}

// Signed angular gap from the end of p to the start of q; negative when
// they overlap.
double signed_gap(const Arc& p, const Arc& q) {
    double g = wrap_angle(q.start - (p.start + p.length));
    if (g > kPi) g -= kTwoPi;
    return g;
}

}  // namespace

bool Arc::contains(double angle) const { return wrap_angle(angle - start) <= length; }

bool ccw_order(double a, double b, double c) {
    const double ob = wrap_angle(b - a);
    const double oc = wrap_angle(c - a);
    return ob > 0 && ob < oc;
}

double common_arc_length(const std::vector<Arc>& arcs) {
    using Piece = std::pair<double, double>;
    auto pieces_of = [](const Arc& arc) {
        std::vector<Piece> out;
        if (arc.length >= kTwoPi) return std::vector<Piece>{{0.0, kTwoPi}};
        if (arc.length <= 0) return out;
        const double s = wrap_angle(arc.start);
        const double e = s + arc.length;
        if (e <= kTwoPi) {
            out.emplace_back(s, e);
        } else {
            out.emplace_back(s, kTwoPi);
            out.emplace_back(0.0, e - kTwoPi);
        }
        return out;
    };
    std::vector<Piece> common{{0.0, kTwoPi}};
    for (const auto& arc : arcs) {
        std::vector<Piece> next;
        for (const auto& p : common)
            for (const auto& q : pieces_of(arc)) {
                const double lo = std::max(p.first, q.first);
                const double hi = std::min(p.second, q.second);
                if (hi > lo) next.emplace_back(lo, hi);
            }
        common = std::move(next);
    }
    double first = 0;
    double last = 0;
    double best = 0;
    for (const auto& [lo, hi] : common) {
        best = std::max(best, hi - lo);
        if (lo == 0.0) first = hi - lo;
        if (hi == kTwoPi) last = hi - lo;
    }
    if (first > 0 && last > 0 && first + last < kTwoPi) best = std::max(best, first + last);
    return best;
}

TangentPoints tangent_points(const Disk& d, const SupportBody& x, double tol) {
    if (!(d.r > 0)) throw PreconditionError("tangent points need a disk of positive radius");
    validate(SupportBody(d));
    validate(x);
    const std::array<SupportBody, 2> pair{SupportBody(d), x};
    require_no_containment(pair, tol);

    const Vec2 dc{d.cx, d.cy};
    const Vec2 delta = center(x) - dc;
    const double dist = norm(delta);
    if (dist == 0) throw PreconditionError("bodies share a center");
    TangentPoints tp{};
    tp.x0 = angle_of(delta);
    tp.xinf = wrap_angle(tp.x0 + kPi);
    if (const auto* xd = std::get_if<Disk>(&x)) {
        const double c = std::clamp((d.r - xd->r) / dist, -1.0, 1.0);
        const double phi = std::acos(c);
        tp.x1 = wrap_angle(tp.x0 - phi);
        tp.x2 = wrap_angle(tp.x0 + phi);
        return tp;
    }
    const SupportBody bd(d);
    const auto [up, down] = positive_arc([&](double a) { return support(x, a) - support(bd, a); });
    tp.x1 = up;
    tp.x2 = down;
    return tp;
}

std::string to_string(const ConfigLabel& label) {
    switch (label.kind) {
        case ConfigKind::Config1:
            return "Config1(center=" + std::to_string(label.center) + ")";
        case ConfigKind::Config2:
            return "Config2(center=" + std::to_string(label.center) + (label.limit ? ", limit" : "") + ")";
        case ConfigKind::Config3:
            break;
    }
    return "Config3";
}

ConfigLabel classify_three(const SupportBody& x, const SupportBody& y, const SupportBody& z, double tol) {
    const std::vector<SupportBody> bodies{x, y, z};
    for (const auto& b : bodies) validate(b);
    require_no_containment(bodies, tol);
    const double threshold = tol * extent_scale(bodies);
    const detail::HullTester tester(bodies);

    for (int w = 0; w < 3; ++w) {
        const ESet others = ESet::full(3).without(w);
        if (tester.contains(others, w, threshold)) return {ConfigKind::Config1, w, false};
    }
    for (int w = 0; w < 3; ++w) {
        const std::vector<SupportBody> others{bodies[static_cast<std::size_t>((w + 1) % 3)],
                                              bodies[static_cast<std::size_t>((w + 2) % 3)]};
        const SupportBody& bw = bodies[static_cast<std::size_t>(w)];
        if (!is_point(bw)) {
            const double m = common_excess(bw, others);
            if (m <= threshold) return {ConfigKind::Config2, w, m >= -threshold};
            continue;
        }
        // A point center splits the hull only when the two tangent cones
        // at it meet edge to edge.
        const Vec2 p = center(bw);
        const Arc k1 = tangent_cone(p, others[0]);
        const Arc k2 = tangent_cone(p, others[1]);
        const double g1 = signed_gap(k1, k2);
        const double g2 = signed_gap(k2, k1);
        const bool touching = (std::abs(g1) <= tol && g2 > 0) || (std::abs(g2) <= tol && g1 > 0);
        if (touching && k1.length + k2.length < kPi) return {ConfigKind::Config2, w, true};
    }
    return {ConfigKind::Config3, -1, false};
}

bool triangle_interior(Vec2 e, Vec2 a, Vec2 b, Vec2 c) {
    const double area = cross(b - a, c - a);
    const double s = std::max({norm(b - a), norm(c - a), norm(c - b)});
    if (std::abs(area) <= 1e-12 * s * s) throw DegeneracyError("triangle vertices are collinear");
    const double sign = area > 0 ? 1.0 : -1.0;
    const double eps = 1e-12 * s * s;
    return sign * cross(b - a, e - a) > eps && sign * cross(c - b, e - b) > eps && sign * cross(a - c, e - c) > eps;
}

bool opposite_angle(Vec2 a, Vec2 e, Vec2 b, Vec2 c) {
    const Vec2 u = e - a;  // ray opposite to EA
    const Vec2 v = e - b;  // ray opposite to EB
    const double s = std::max(norm(u), norm(v));
    if (norm(u) == 0 || norm(v) == 0) throw DegeneracyError("angle ray has zero length");
    const double det = cross(u, v);
    if (std::abs(det) <= 1e-12 * s * s) throw DegeneracyError("angle rays are parallel");
    // c - e = alpha u + beta v.
    const Vec2 w = c - e;
    const double alpha = cross(w, v) / det;
    const double beta = cross(u, w) / det;
    return alpha > 1e-12 && beta > 1e-12;
}

PointOrder point_order(const LabeledConfig& config, Element a, Element b, Element c, Element d) {
    validate(config);
    const int n = config.ground.size();
    for (Element e : {a, b, c, d})
        if (e < 0 || e >= n) throw InputError("element out of range");
    if (ESet::single(a).with(b).with(c).with(d).size() != 4) throw PreconditionError("roles must be distinct");
    const auto* dd = std::get_if<Disk>(&config.body(d));
    if (!dd || !(dd->r > 0)) throw PreconditionError("d must be a disk of positive radius");

    const detail::HullTester tester(config.bodies);
    const double threshold = config.tol * config.scale();
    const ESet abc = ESet::single(a).with(b).with(c);
    bool tight = tester.contains(abc, d, threshold);
    for (Element z : abc) tight = tight && !tester.contains(abc.without(z), d, threshold);
    if (!tight) throw PreconditionError("the implication abc->d is not tight");

    const Vec2 dc{dd->cx, dd->cy};
    PointOrder result;
    if (!ccw_order(angle_of(center(config.body(b)) - dc), angle_of(center(config.body(a)) - dc),
                   angle_of(center(config.body(c)) - dc))) {
        std::swap(a, c);
        result.relabeled = true;
    }
    const TangentPoints ta = tangent_points(*dd, config.body(a), config.tol);
    const TangentPoints tb = tangent_points(*dd, config.body(b), config.tol);
    const TangentPoints tc = tangent_points(*dd, config.body(c), config.tol);
    // The c pair is labeled so that C2, C0, C1 run counterclockwise.
    const std::array<LabeledAngle, 6> seq{{{"B1", tb.x1},
                                           {"C1", tc.x2},
                                           {"A1", ta.x1},
                                           {"B2", tb.x2},
                                           {"C2", tc.x1},
                                           {"A2", ta.x2}}};

    const double ang_tol = config.tol;
    std::array<double, 6> off{};
    for (std::size_t i = 0; i < 6; ++i) off[i] = wrap_angle(seq[i].angle - seq[0].angle + ang_tol) - ang_tol;
    off[0] = 0;
    bool wraps_to_start = false;
    if (off[5] < ang_tol && off[4] > ang_tol) {
        off[5] += kTwoPi;
        wraps_to_start = true;
    }
    result.conforms = true;
    for (std::size_t i = 1; i < 6; ++i)
        if (off[i] < off[i - 1] - ang_tol) result.conforms = false;

    std::vector<std::vector<std::string>> groups{{seq[0].name}};
    for (std::size_t i = 1; i < 6; ++i) {
        if (std::abs(off[i] - off[i - 1]) <= ang_tol)
            groups.back().push_back(seq[i].name);
        else
            groups.push_back({seq[i].name});
    }
    if ((wraps_to_start || off[5] >= kTwoPi - ang_tol) && groups.size() > 1) {
        auto tail = groups.back();
        groups.pop_back();
        tail.insert(tail.end(), groups.front().begin(), groups.front().end());
        groups.front() = std::move(tail);
    }
    for (auto& g : groups)
        if (g.size() > 1) result.merged.push_back(g);

    // A conforming order is already counterclockwise up to merged ties.
    std::array<std::size_t, 6> idx{0, 1, 2, 3, 4, 5};
    if (!result.conforms)
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return off[i] < off[j]; });
    for (std::size_t i : idx) result.order.push_back({seq[i].name, wrap_angle(seq[i].angle)});
    return result;
}

bool q_region_empty(const LabeledConfig& config, Element d, ESet ys) {
    validate(config);
    if (ys.size() < 1 || ys.size() > 3) throw PreconditionError("Q-region needs one to three bodies");
    if (ys.contains(d)) throw PreconditionError("d must not be among the bodies");
    if (!config.ground.contains(ys) || d < 0 || d >= config.ground.size()) throw InputError("element out of range");

    const std::vector<SupportBody> others = config.bodies_of(ys);
    std::vector<SupportBody> involved = others;
    involved.push_back(config.body(d));
    require_no_containment(involved, config.tol);

    const SupportBody& bd = config.body(d);
    if (!is_point(bd)) return common_excess(bd, others) <= config.tol * extent_scale(involved);
    std::vector<Arc> cones;
    for (const auto& o : others) cones.push_back(tangent_cone(center(bd), o));
    return common_arc_length(cones) <= config.tol;
}

}  // namespace convexgeo
