#include <convexgeo/body.hpp>

#include <convexgeo/error.hpp>

#include "sampling.hpp"

#include <cmath>
#include <limits>
#include <type_traits>

namespace convexgeo {

double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 a) { return std::hypot(a.x, a.y); }
Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

void validate(const SupportBody& body) {
    if (const auto* d = std::get_if<Disk>(&body)) {
        if (!std::isfinite(d->cx) || !std::isfinite(d->cy) || !std::isfinite(d->r))
            throw InputError("disk has a non-finite field");
        if (d->r < 0) throw InputError("disk radius must be non-negative");
        return;
    }
    const auto& e = std::get<EllipseBody>(body);
    if (!std::isfinite(e.cx) || !std::isfinite(e.cy) || !std::isfinite(e.a) || !std::isfinite(e.b) ||
        !std::isfinite(e.theta))
        throw InputError("ellipse has a non-finite field");
    if (!(e.b > 0) || e.a < e.b) throw InputError("ellipse semi-axes must satisfy a >= b > 0");
}

Vec2 center(const SupportBody& body) {
    return std::visit([](const auto& b) { return Vec2{b.cx, b.cy}; }, body);
}

bool is_point(const SupportBody& body) {
    const auto* d = std::get_if<Disk>(&body);
    return d && d->r == 0;
}

double support(const SupportBody& body, Vec2 u) {
    if (const auto* d = std::get_if<Disk>(&body)) return d->cx * u.x + d->cy * u.y + d->r;
    const auto& e = std::get<EllipseBody>(body);
    const double c = std::cos(e.theta);
    const double s = std::sin(e.theta);
    const double along = u.x * c + u.y * s;
    const double across = -u.x * s + u.y * c;
    return e.cx * u.x + e.cy * u.y + std::sqrt(e.a * e.a * along * along + e.b * e.b * across * across);
}

double support(const SupportBody& body, double angle) { return support(body, unit(angle)); }

Box bounds(const SupportBody& body) {
    if (const auto* d = std::get_if<Disk>(&body)) return {d->cx - d->r, d->cy - d->r, d->cx + d->r, d->cy + d->r};
    const auto& e = std::get<EllipseBody>(body);
    const double wx = support(EllipseBody{0, 0, e.a, e.b, e.theta}, 0.0);
    const double wy = support(EllipseBody{0, 0, e.a, e.b, e.theta}, kPi / 2);
    return {e.cx - wx, e.cy - wy, e.cx + wx, e.cy + wy};
}

Box bounds(std::span<const SupportBody> bodies) {
    if (bodies.empty()) return {0, 0, 0, 0};
    Box out = bounds(bodies.front());
    for (const auto& b : bodies.subspan(1)) {
        const Box x = bounds(b);
        out.xmin = std::min(out.xmin, x.xmin);
        out.ymin = std::min(out.ymin, x.ymin);
        out.xmax = std::max(out.xmax, x.xmax);
        out.ymax = std::max(out.ymax, x.ymax);
    }
    return out;
}

double extent_scale(std::span<const SupportBody> bodies) {
    const Box b = bounds(bodies);
    const double d = std::hypot(b.xmax - b.xmin, b.ymax - b.ymin);
    return d > 0 ? d : 1.0;
}

namespace {

std::vector<SupportBody> joined(const SupportBody& x, std::span<const SupportBody> hull) {
    if (hull.empty()) throw InputError("convex hull of no bodies");
    std::vector<SupportBody> all(hull.begin(), hull.end());
    all.push_back(x);
    return all;
}

}  // namespace

double hull_margin(const SupportBody& x, std::span<const SupportBody> hull, int samples) {
    const auto all = joined(x, hull);
    const detail::HullTester tester(all, samples);
    return tester.margin(ESet::full(static_cast<int>(hull.size())), static_cast<int>(hull.size()));
}

bool body_in_hull(const SupportBody& x, std::span<const SupportBody> hull, double tol) {
    const auto all = joined(x, hull);
    return body_in_hull(x, hull, tol, extent_scale(all));
}

bool body_in_hull(const SupportBody& x, std::span<const SupportBody> hull, double tol, double scale) {
    const auto all = joined(x, hull);
    const detail::HullTester tester(all);
    return tester.contains(ESet::full(static_cast<int>(hull.size())), static_cast<int>(hull.size()), tol * scale);
}

namespace detail {

DirectionGrid::DirectionGrid(int count) : n(count), step(kTwoPi / count) {
    if (count < 8) throw InputError("direction grid needs at least 8 samples");
    angle.resize(static_cast<std::size_t>(n));
    dir.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        angle[static_cast<std::size_t>(k)] = step * k;
        dir[static_cast<std::size_t>(k)] = unit(step * k);
    }
}

const DirectionGrid& DirectionGrid::standard() {
    static const DirectionGrid grid(kDefaultSamples);
    return grid;
}

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0) a += kTwoPi;
    if (a >= kTwoPi) a = 0;
    return a;
}

namespace {

SupportBody shifted(const SupportBody& body, Vec2 o) {
    return std::visit(
        [&](auto b) -> SupportBody {
            b.cx -= o.x;
            b.cy -= o.y;
            return b;
        },
        body);
}

double reach(const SupportBody& body) {
    const double r = std::visit(
        [](const auto& b) {
            if constexpr (std::is_same_v<std::decay_t<decltype(b)>, Disk>)
                return b.r;
            else
                return b.a;
        },
        body);
    return norm(center(body)) + r;
}

}  // namespace

HullTester::HullTester(std::span<const SupportBody> bodies, int samples) {
    if (samples != kDefaultSamples) owned_.emplace(samples);
    const Box box = bounds(bodies);
    const Vec2 origin{0.5 * (box.xmin + box.xmax), 0.5 * (box.ymin + box.ymax)};
    const DirectionGrid& g = grid();
    for (const auto& b : bodies) {
        validate(b);
        bodies_.push_back(shifted(b, origin));
        reach_.push_back(reach(bodies_.back()));
        std::vector<double> h(static_cast<std::size_t>(g.n));
        for (int k = 0; k < g.n; ++k) h[static_cast<std::size_t>(k)] = support(bodies_.back(), g.dir[static_cast<std::size_t>(k)]);
        samples_.push_back(std::move(h));
    }
}

void HullTester::hull_samples(ESet hull, std::vector<double>& out) const {
    const auto n = static_cast<std::size_t>(grid().n);
    out.assign(n, -std::numeric_limits<double>::infinity());
    for (Element i : hull) {
        const auto& h = samples_[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k < n; ++k) out[k] = std::max(out[k], h[k]);
    }
}

double HullTester::sup(ESet hull, double angle) const {
    const Vec2 u = unit(angle);
    double best = -std::numeric_limits<double>::infinity();
    for (Element i : hull) best = std::max(best, support(body(i), u));
    return best;
}

double HullTester::margin(ESet hull, int x) const {
    if (hull.empty()) throw InputError("convex hull of no bodies");
    std::vector<double> h;
    hull_samples(hull, h);
    const auto& hx = samples_[static_cast<std::size_t>(x)];
    for (std::size_t k = 0; k < h.size(); ++k) h[k] -= hx[k];
    const SupportBody& bx = body(x);
    const auto g = [&](double a) { return sup(hull, a) - support(bx, a); };
    return refine_minimum(g, h, grid()).value;
}

bool HullTester::decide(ESet hull, int x, const std::vector<double>& h, double threshold) const {
    const auto& hx = samples_[static_cast<std::size_t>(x)];
    std::vector<double> g(h.size());
    double lowest = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < h.size(); ++k) {
        g[k] = h[k] - hx[k];
        lowest = std::min(lowest, g[k]);
    }
    if (lowest < -threshold) return false;
    // g is Lipschitz with constant at most twice the largest reach, so the
    // true minimum is within reach * step of the sampled one.
    double lipschitz = reach_[static_cast<std::size_t>(x)];
    for (Element i : hull) lipschitz = std::max(lipschitz, reach_[static_cast<std::size_t>(i)]);
    if (lowest - lipschitz * grid().step >= -threshold) return true;
    const SupportBody& bx = body(x);
    const auto f = [&](double a) { return sup(hull, a) - support(bx, a); };
    return refine_minimum(f, g, grid()).value >= -threshold;
}

bool HullTester::contains(ESet hull, int x, double threshold) const {
    if (hull.empty()) throw InputError("convex hull of no bodies");
    if (hull.contains(x)) return true;
    std::vector<double> h;
    hull_samples(hull, h);
    return decide(hull, x, h, threshold);
}

ESet HullTester::close(ESet y, double threshold) const {
    if (y.empty()) return y;
    std::vector<double> h;
    hull_samples(y, h);
    ESet out = y;
    for (int x = 0; x < size(); ++x)
        if (!y.contains(x) && decide(y, x, h, threshold)) out = out.with(x);
    return out;
}

}  // namespace detail

}  // namespace convexgeo
