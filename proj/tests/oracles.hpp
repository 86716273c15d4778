#pragma once

// Independent reference implementations used as test oracles. They work on
// raw masks and plain coordinates and share no code with the library.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Rule = std::pair<std::uint32_t, std::uint32_t>;  // premise, conclusion

inline bool respects(const std::vector<Rule>& rules, std::uint32_t s) {
    for (auto [p, c] : rules)
        if ((p & ~s) == 0 && (c & ~s) != 0) return false;
    return true;
}

// Smallest superset of y closed under every rule, by scanning all supersets.
inline std::uint32_t closure(int n, const std::vector<Rule>& rules, std::uint32_t y) {
    const std::uint32_t full = (1u << n) - 1u;
    std::uint32_t best = full;
    for (std::uint32_t s = 0; s <= full; ++s)
        if ((y & ~s) == 0 && respects(rules, s) && std::popcount(s) < std::popcount(best)) best = s;
    return best;
}

inline bool is_family_geometry(int n, const std::vector<char>& in) {
    const std::uint32_t full = (1u << n) - 1u;
    if (!in[0] || !in[full]) return false;
    for (std::uint32_t a = 0; a <= full; ++a) {
        if (!in[a]) continue;
        for (std::uint32_t b = 0; b <= full; ++b)
            if (in[b] && !in[a & b]) return false;
        if (a == full) continue;
        bool ext = false;
        for (int e = 0; e < n; ++e)
            if (!((a >> e) & 1u) && in[a | (1u << e)]) ext = true;
        if (!ext) return false;
    }
    return true;
}

struct BruteCounts {
    std::uint64_t labeled = 0;
    std::uint64_t classes = 0;
};

// Every family of subsets containing empty and full is tested against the
// axioms; classes counted by minimum 64-bit membership word over relabelings.
inline BruteCounts brute_geometry_counts(int n) {
    const std::uint32_t full = (1u << n) - 1u;
    const std::uint32_t subsets = full + 1;
    std::vector<std::uint32_t> middle;
    for (std::uint32_t m = 1; m < full; ++m) middle.push_back(m);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::vector<std::vector<std::uint32_t>> maps;
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<std::uint32_t> map(subsets);
        for (std::uint32_t m = 0; m < subsets; ++m) {
            std::uint32_t r = 0;
            for (int e = 0; e < n; ++e)
                if ((m >> e) & 1u) r |= 1u << perm[static_cast<std::size_t>(e)];
            map[m] = r;
        }
        maps.push_back(map);
    } while (std::next_permutation(perm.begin(), perm.end()));

    BruteCounts out;
    std::set<std::uint64_t> classes;
    const std::uint64_t families = std::uint64_t{1} << middle.size();
    std::vector<char> in(subsets);
    for (std::uint64_t f = 0; f < families; ++f) {
        std::fill(in.begin(), in.end(), 0);
        in[0] = in[full] = 1;
        std::uint64_t word = 1 | (std::uint64_t{1} << full);
        for (std::size_t i = 0; i < middle.size(); ++i)
            if ((f >> i) & 1u) {
                in[middle[i]] = 1;
                word |= std::uint64_t{1} << middle[i];
            }
        if (!is_family_geometry(n, in)) continue;
        ++out.labeled;
        std::uint64_t best = ~std::uint64_t{0};
        for (const auto& map : maps) {
            std::uint64_t w = 0;
            for (std::uint32_t m = 0; m < subsets; ++m)
                if ((word >> m) & 1u) w |= std::uint64_t{1} << map[m];
            best = std::min(best, w);
        }
        classes.insert(best);
    }
    out.classes = classes.size();
    return out;
}

// Largest antichain under strict inclusion, by subset search over the family.
inline int brute_width(const std::vector<std::uint32_t>& sets) {
    const std::size_t k = sets.size();
    int best = 0;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << k); ++pick) {
        bool anti = true;
        for (std::size_t i = 0; i < k && anti; ++i) {
            if (!((pick >> i) & 1u)) continue;
            for (std::size_t j = 0; j < k; ++j)
                if (i != j && ((pick >> j) & 1u) && (sets[i] & ~sets[j]) == 0) {
                    anti = false;
                    break;
                }
        }
        if (anti) best = std::max(best, std::popcount(pick));
    }
    return best;
}

}  // namespace oracle

// ---------------------------------------------------------------------------
// Planar oracle: bodies are sampled into boundary points and hulls are built
// as polygons with a monotone chain. Independent of the library's support
// function machinery.

namespace oracle {

struct P {
    double x, y;
};

inline double cross3(P o, P a, P b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

// Ellipse with semi-axes a, b rotated by t; a disk has a == b.
struct Body {
    double cx, cy, a, b, t;
};

inline Body disk(double cx, double cy, double r) { return {cx, cy, r, r, 0}; }

inline P boundary_point(const Body& body, double s) {
    const double u = body.a * std::cos(s);
    const double v = body.b * std::sin(s);
    const double c = std::cos(body.t);
    const double sn = std::sin(body.t);
    return {body.cx + c * u - sn * v, body.cy + sn * u + c * v};
}

// Counterclockwise convex polygon without repeated points.
inline std::vector<P> convex_hull(std::vector<P> pts) {
    std::sort(pts.begin(), pts.end(), [](P p, P q) { return p.x != q.x ? p.x < q.x : p.y < q.y; });
    pts.erase(std::unique(pts.begin(), pts.end(), [](P p, P q) { return p.x == q.x && p.y == q.y; }), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<P> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross3(h[k - 2], h[k - 1], pts[i - 1]) <= 0) --k;
        h[k++] = pts[i - 1];
    }
    h.resize(k - 1);
    return h;
}

inline std::vector<P> hull_polygon(const std::vector<Body>& bodies, int per_body = 8192) {
    std::vector<P> pts;
    for (const auto& b : bodies)
        for (int k = 0; k < per_body; ++k) pts.push_back(boundary_point(b, 2 * M_PI * k / per_body));
    return convex_hull(std::move(pts));
}

// Largest signed distance of p beyond an edge line; <= 0 inside. Linear
// scan; fine for the sizes used in tests.
inline double outside_distance(const std::vector<P>& poly, P p) {
    if (poly.size() == 1) return std::hypot(p.x - poly[0].x, p.y - poly[0].y);
    double worst = -1e300;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const P a = poly[i];
        const P b = poly[(i + 1) % poly.size()];
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        if (len == 0) continue;
        worst = std::max(worst, -cross3(a, b, p) / len);
    }
    return worst;
}

// Point in a counterclockwise convex polygon with at least three vertices:
// binary search over the fan at vertex 0; tolerance `eps` in length units.
inline bool in_polygon(const std::vector<P>& poly, P p, double eps) {
    const std::size_t n = poly.size();
    if (n < 3) return outside_distance(poly, p) <= eps;
    auto side = [&](std::size_t i, std::size_t j) {
        const double len = std::hypot(poly[j].x - poly[i].x, poly[j].y - poly[i].y);
        return cross3(poly[i], poly[j], p) / len;
    };
    if (side(0, 1) < -eps || side(n - 1, 0) < -eps) return false;
    std::size_t lo = 1;
    std::size_t hi = n - 1;
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (cross3(poly[0], poly[mid], p) >= 0)
            lo = mid;
        else
            hi = mid;
    }
    return side(lo, hi) >= -eps;
}

// Monte-Carlo boundary oracle: x is in the hull iff every stratified,
// jittered boundary sample of x lies in the sampled hull polygon.
inline bool contains(const Body& x, const std::vector<P>& poly, int samples, std::mt19937_64& rng, double eps) {
    std::uniform_real_distribution<double> jitter(0.0, 1.0);
    for (int k = 0; k < samples; ++k) {
        const double s = 2 * M_PI * (k + jitter(rng)) / samples;
        if (!in_polygon(poly, boundary_point(x, s), eps)) return false;
    }
    return true;
}

}  // namespace oracle

namespace oracle {

enum class Verdict { Yes, No, Unsure };

// Are all points within eps_in of the union of the polygons (Yes), or is one
// farther than eps_out from both (No)?
inline Verdict covered(const std::vector<P>& pts, const std::vector<std::vector<P>>& polys, double eps_in,
                       double eps_out) {
    bool all_in = true;
    for (P p : pts) {
        bool in = false;
        bool near = false;
        for (const auto& poly : polys) {
            in = in || in_polygon(poly, p, eps_in);
            near = near || in_polygon(poly, p, eps_out);
        }
        if (!near) return Verdict::No;
        all_in = all_in && in;
    }
    return all_in ? Verdict::Yes : Verdict::Unsure;
}

// Boundary vertices of a polygon, its edges subdivided to spacing h, and a
// grid of interior points.
inline std::vector<P> probe_points(const std::vector<P>& poly, double h, int grid) {
    std::vector<P> out;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const P a = poly[i];
        const P b = poly[(i + 1) % poly.size()];
        xmin = std::min(xmin, a.x);
        xmax = std::max(xmax, a.x);
        ymin = std::min(ymin, a.y);
        ymax = std::max(ymax, a.y);
        const int steps = std::max(1, static_cast<int>(std::hypot(b.x - a.x, b.y - a.y) / h));
        for (int s = 0; s < steps; ++s) {
            const double t = static_cast<double>(s) / steps;
            out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
        }
    }
    for (int i = 0; i <= grid; ++i)
        for (int j = 0; j <= grid; ++j) {
            const P p{xmin + (xmax - xmin) * i / grid, ymin + (ymax - ymin) * j / grid};
            if (in_polygon(poly, p, 0)) out.push_back(p);
        }
    return out;
}

struct ThreeLabel {
    int kind = 0;            // 1, 2 or 3; 0 when undecided
    std::vector<int> centers;  // admissible centers for kinds 1 and 2
};

// The configuration type of three bodies decided from hull equalities:
// 1 when CH(x,y,z) = CH(others of w), 2 when CH(x,y,z) = CH(w,o1) u CH(w,o2),
// 3 when neither holds for any w.
inline ThreeLabel classify_three(const std::array<Body, 3>& bodies, double eps_in = 1e-5, double eps_out = 1e-3) {
    const int per_body = 4096;
    const auto all = hull_polygon({bodies[0], bodies[1], bodies[2]}, per_body);
    std::vector<std::vector<P>> duo(9);  // duo[3i+j] = CH(body i, body j)
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            duo[static_cast<std::size_t>(3 * i + j)] = hull_polygon({bodies[static_cast<std::size_t>(i)], bodies[static_cast<std::size_t>(j)]}, per_body);
            duo[static_cast<std::size_t>(3 * j + i)] = duo[static_cast<std::size_t>(3 * i + j)];
        }
    ThreeLabel out;
    bool unsure = false;
    for (int w = 0; w < 3; ++w) {
        const int o1 = (w + 1) % 3;
        const int o2 = (w + 2) % 3;
        std::vector<P> rim;
        for (int k = 0; k < 2048; ++k) rim.push_back(boundary_point(bodies[static_cast<std::size_t>(w)], 2 * M_PI * k / 2048));
        const Verdict v = covered(rim, {duo[static_cast<std::size_t>(3 * o1 + o2)]}, eps_in, eps_out);
        if (v == Verdict::Yes) out.centers.push_back(w);
        if (v == Verdict::Unsure) unsure = true;
    }
    if (!out.centers.empty()) {
        out.kind = unsure ? 0 : 1;
        return out;
    }
    if (unsure) return out;
    const auto probes = probe_points(all, 0.01, 80);
    bool all_no = true;
    for (int w = 0; w < 3; ++w) {
        const int o1 = (w + 1) % 3;
        const int o2 = (w + 2) % 3;
        const Verdict v = covered(probes, {duo[static_cast<std::size_t>(3 * w + o1)], duo[static_cast<std::size_t>(3 * w + o2)]}, eps_in, eps_out);
        if (v == Verdict::Yes) out.centers.push_back(w);
        if (v != Verdict::No) all_no = false;
    }
    if (!out.centers.empty()) out.kind = 2;
    else if (all_no) out.kind = 3;
    return out;
}

}  // namespace oracle

namespace oracle {

// Obstruction patterns replayed on a raw closed-set family: closure as the
// intersection of closed supersets, tightness over every proper subset.
struct Family {
    int n;
    std::vector<std::uint32_t> closed;

    std::uint32_t close(std::uint32_t y) const {
        std::uint32_t out = (1u << n) - 1u;
        for (std::uint32_t s : closed)
            if ((y & ~s) == 0) out &= s;
        return out;
    }
    bool implies(std::uint32_t p, int u) const { return (close(p) >> u) & 1u; }
    bool tight(std::uint32_t p, int u) const {
        if (((p >> u) & 1u) || !implies(p, u)) return false;
        for (std::uint32_t q = (p - 1) & p;; q = (q - 1) & p) {
            if (implies(q, u)) return false;
            if (q == 0) break;
        }
        return true;
    }
};

// kind: 0 Opposite, 1 Separation, 2 NestedTriangle, 3 AreaQ.
inline bool pattern(const Family& f, int kind, const std::array<int, 5>& r) {
    const auto m = [&](std::initializer_list<int> es) {
        std::uint32_t s = 0;
        for (int e : es) s |= 1u << r[static_cast<std::size_t>(e)];
        return s;
    };
    const auto imp = [&](std::initializer_list<int> es, int u) { return f.implies(m(es), r[static_cast<std::size_t>(u)]); };
    const auto tight = [&](std::initializer_list<int> es, int u) { return f.tight(m(es), r[static_cast<std::size_t>(u)]); };
    enum { a, b, c, d, e };
    switch (kind) {
        case 0: return tight({b, c, d}, e) && imp({a, b}, e) && imp({a, c}, e) && imp({a, d}, e) && !imp({a}, e);
        case 1: return tight({a, c, d}, e) && tight({b, c, d}, e) && imp({a, b}, e);
        case 2:
            return tight({a, b, c}, d) && imp({a, b, d}, e) && imp({c, b, d}, e) && !imp({b, d}, e) &&
                   !(imp({a, d}, e) && imp({c, d}, e));
        default: return tight({a, b, c}, d) && imp({a, d}, e) && imp({b, d}, e) && imp({c, d}, e) && !imp({d}, e);
    }
}

// All witnesses of a 5-element family, in lexicographic role order.
inline std::vector<std::array<int, 5>> witnesses(const Family& f, int kind) {
    std::vector<std::array<int, 5>> out;
    std::array<int, 5> r{0, 1, 2, 3, 4};
    do {
        if (pattern(f, kind, r)) out.push_back(r);
    } while (std::next_permutation(r.begin(), r.end()));
    return out;
}

}  // namespace oracle
