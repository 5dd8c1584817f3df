// Independent reference implementations for cross-checking the numeric
// kernels.  Everything here is deliberately brute force: enumerate, grid,
// or sum directly, never reuse the library's algorithmic shortcuts.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "t2hflts/trapezoid.hpp"

namespace oracle {

// Deterministic 64-bit generator (splitmix64); the standard engines are
// portable but this keeps the tests independent of library distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform() { return double(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int index(int n) { return int(next() % std::uint64_t(n)); }

  private:
    std::uint64_t state_;
};

// Extremes of sum(x*w)/sum(w) by enumerating every switch assignment.
// xs ascending; w in [wl, wh] per point.  The objective is monotone in each
// weight, so the optimum puts every weight at an endpoint, heavy on one side
// of a switch index.  Assignments with zero total weight are skipped.
struct BruteBounds {
    double lo;
    double hi;
};

inline BruteBounds brute_interval_weighted_average(const std::vector<double>& xs,
                                                   const std::vector<double>& wl,
                                                   const std::vector<double>& wh) {
    const int n = int(xs.size());
    double lo = 1e300, hi = -1e300;
    for (int k = -1; k < n; ++k) {
        double num_lo = 0.0, den_lo = 0.0, num_hi = 0.0, den_hi = 0.0;
        for (int i = 0; i < n; ++i) {
            const double w_min = i <= k ? wh[i] : wl[i];  // heavy left: minimizes
            const double w_max = i <= k ? wl[i] : wh[i];  // heavy right: maximizes
            num_lo += xs[i] * w_min;
            den_lo += w_min;
            num_hi += xs[i] * w_max;
            den_hi += w_max;
        }
        if (den_lo > 0.0) lo = std::min(lo, num_lo / den_lo);
        if (den_hi > 0.0) hi = std::max(hi, num_hi / den_hi);
    }
    if (lo > hi) throw std::runtime_error("oracle: no feasible weight assignment");
    return {lo, hi};
}

// Fuzziness interval by enumerating embedded-set choices per point.  The
// per-point term 1-|2u-1| is maximized at 0.5 when reachable and otherwise
// at the nearer bound, minimized at one of the bounds; the mean decomposes
// pointwise, so per-point candidate enumeration is exhaustive.
inline std::pair<double, double> brute_fuzziness(const t2h::SampledFOU& fou) {
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < fou.size(); ++i) {
        std::vector<double> candidates = {fou.lower[i], fou.upper[i]};
        if (fou.lower[i] <= 0.5 && 0.5 <= fou.upper[i]) candidates.push_back(0.5);
        double t_min = 2.0, t_max = -1.0;
        for (double mu : candidates) {
            const double t = 1.0 - std::fabs(2.0 * mu - 1.0);
            t_min = std::min(t_min, t);
            t_max = std::max(t_max, t);
        }
        lo += t_min;
        hi += t_max;
    }
    const double n = double(fou.size());
    return {lo / n, hi / n};
}

// Random sampled FOU: ascending grid, nested tracks, strictly positive
// upper membership so the centroid is defined at every point.
inline t2h::SampledFOU random_fou(Rng& rng, int max_points) {
    const std::size_t n = std::size_t(3 + rng.index(max_points - 2));
    std::vector<double> grid(n), lower(n), upper(n);
    double x = rng.uniform(0.0, 0.1);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = x;
        x += rng.uniform(0.01, 0.1);
    }
    const double span = grid.back();
    if (span > 1.0)
        for (double& v : grid) v /= span;
    for (std::size_t i = 0; i < n; ++i) {
        const double hi = rng.uniform(0.05, 1.0);
        upper[i] = hi;
        lower[i] = rng.uniform(0.0, hi);
    }
    return t2h::SampledFOU::from_tracks(std::move(grid), std::move(lower),
                                        std::move(upper));
}

// Random trapezoid with knots inside [lo, hi].
inline t2h::Trapezoid random_trapezoid(Rng& rng, double lo, double hi,
                                       double height = 1.0) {
    double k[4];
    for (double& v : k) v = rng.uniform(lo, hi);
    std::sort(std::begin(k), std::end(k));
    return t2h::Trapezoid(k[0], k[1], k[2], k[3], height);
}

// Random IT2TrFN: shrink the upper trapezoid toward its plateau to get a
// nested lower band.
inline t2h::IT2TrFN random_it2(Rng& rng, double lo = 0.0, double hi = 1.0) {
    const t2h::Trapezoid u = random_trapezoid(rng, lo, hi);
    const double s = rng.uniform(0.1, 0.9);  // pull feet toward the plateau
    const double a = u.a + s * (u.b - u.a);
    const double d = u.d - s * (u.d - u.c);
    const double h = rng.uniform(0.5, 1.0);
    return {u, t2h::Trapezoid(a, u.b, u.c, d, h)};
}

// One bound of the fuzzy weighted average at a fixed cut level, by scanning
// an 11-point grid per weight interval.  The x contribution is separable
// (coefficients are nonnegative), so only weights need the grid.
inline std::pair<double, double> grid_fwa_bounds(
    const std::vector<std::pair<double, double>>& x_cuts,
    const std::vector<std::pair<double, double>>& w_cuts, int grid_points = 11) {
    const std::size_t n = x_cuts.size();
    std::vector<std::size_t> idx(n, 0);
    double lo = 1e300, hi = -1e300;
    while (true) {
        double den = 0.0, num_lo = 0.0, num_hi = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto [wl, wh] = w_cuts[i];
            const double w =
                wl + (wh - wl) * double(idx[i]) / double(grid_points - 1);
            den += w;
            num_lo += x_cuts[i].first * w;
            num_hi += x_cuts[i].second * w;
        }
        if (den > 0.0) {
            lo = std::min(lo, num_lo / den);
            hi = std::max(hi, num_hi / den);
        }
        std::size_t p = 0;
        while (p < n && ++idx[p] == std::size_t(grid_points)) idx[p++] = 0;
        if (p == n) break;
    }
    if (lo > hi) throw std::runtime_error("oracle: all weight grids were zero");
    return {lo, hi};
}

}  // namespace oracle
