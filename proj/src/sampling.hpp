#pragma once

// Direction sampling and extremum refinement shared by the hull predicates.

#include <convexgeo/body.hpp>
#include <convexgeo/eset.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

namespace convexgeo::detail {

struct DirectionGrid {
    explicit DirectionGrid(int n);
    int n;
    double step;
    std::vector<double> angle;
    std::vector<Vec2> dir;

    // Shared instance for the default resolution.
    static const DirectionGrid& standard();
};

struct Extremum {
    double value;
    double angle;
};

inline constexpr double kAngleResolution = 1e-12;
inline constexpr int kRefinedCandidates = 8;

// Golden-section search for a minimum of f on [lo, hi].
template <class F>
Extremum golden_minimum(const F& f, double lo, double hi) {
    constexpr double kInv = 0.6180339887498949;
    double x1 = hi - kInv * (hi - lo);
    double x2 = lo + kInv * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > kAngleResolution) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInv * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInv * (hi - lo);
            f2 = f(x2);
        }
    }
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    Extremum best{fm, mid};
    if (f1 < best.value) best = {f1, x1};
    if (f2 < best.value) best = {f2, x2};
    return best;
}

// Minimum of a 2pi-periodic f given its grid samples: each of the lowest
// local minima of the samples is refined between its neighbours.
template <class F>
Extremum refine_minimum(const F& f, const std::vector<double>& samples, const DirectionGrid& grid,
                        int max_candidates = kRefinedCandidates) {
    const int n = grid.n;
    std::vector<int> candidates;
    for (int k = 0; k < n; ++k) {
        const double prev = samples[static_cast<std::size_t>((k + n - 1) % n)];
        const double next = samples[static_cast<std::size_t>((k + 1) % n)];
        const double v = samples[static_cast<std::size_t>(k)];
        if (v <= prev && v <= next) candidates.push_back(k);
    }
    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
        const double va = samples[static_cast<std::size_t>(a)];
        const double vb = samples[static_cast<std::size_t>(b)];
        return va != vb ? va < vb : a < b;
    });
    if (static_cast<int>(candidates.size()) > max_candidates) candidates.resize(static_cast<std::size_t>(max_candidates));

    Extremum best{samples[static_cast<std::size_t>(candidates.front())],
                  grid.angle[static_cast<std::size_t>(candidates.front())]};
    for (int k : candidates) {
        const double mid = grid.angle[static_cast<std::size_t>(k)];
        const Extremum e = golden_minimum(f, mid - grid.step, mid + grid.step);
        if (e.value < best.value) best = e;
    }
    return best;
}

// Normalizes into [0, 2pi).
double wrap_angle(double a);

// Bodies translated to a common origin, with their support samples on a grid.
// Hull questions are asked with subsets of body indices.
class HullTester {
public:
    HullTester(std::span<const SupportBody> bodies, int samples = kDefaultSamples);

    int size() const { return static_cast<int>(bodies_.size()); }
    const SupportBody& body(int i) const { return bodies_[static_cast<std::size_t>(i)]; }
    const DirectionGrid& grid() const { return owned_ ? *owned_ : DirectionGrid::standard(); }

    // max_{i in hull} h_i - h_x, minimized over directions.
    double margin(ESet hull, int x) const;
    // margin >= -threshold, with early decisions from the sampled values.
    bool contains(ESet hull, int x, double threshold) const;
    // {x : contains(y, x, threshold)} united with y; empty for empty y.
    ESet close(ESet y, double threshold) const;

private:
    void hull_samples(ESet hull, std::vector<double>& out) const;
    bool decide(ESet hull, int x, const std::vector<double>& h, double threshold) const;
    double sup(ESet hull, double angle) const;

    std::optional<DirectionGrid> owned_;
    std::vector<SupportBody> bodies_;
    std::vector<double> reach_;                  // max |p| over each body
    std::vector<std::vector<double>> samples_;  // samples_[i][k] = h_i(angle k)
};

}  // namespace convexgeo::detail
