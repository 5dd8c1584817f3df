#include "t2hflts/fuzziness.hpp"

#include <cmath>

#include "t2hflts/errors.hpp"

namespace t2h {

namespace {

inline double point_fuzz(double mu) { return 1.0 - std::fabs(2.0 * mu - 1.0); }

}  // namespace

double yager_fuzziness(const Trapezoid& t, std::size_t grid_n) {
    const auto xs = uniform_grid(grid_n);
    double acc = 0.0;
    for (double x : xs) acc += point_fuzz(t.membership(x));
    return acc / double(grid_n);
}

std::pair<double, double> it2_fuzziness(const SampledFOU& fou) {
    double lo = 0.0, hi = 0.0;
    const std::size_t n = fou.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double l = fou.lower[i];
        const double u = fou.upper[i];
        // least fuzzy embedded set: the bound farther from 1/2
        const double far_mu = (std::fabs(l - 0.5) >= std::fabs(u - 0.5)) ? l : u;
        lo += point_fuzz(far_mu);
        // most fuzzy embedded set: 1/2 when reachable, else the nearer bound
        double near_mu;
        if (l <= 0.5 && 0.5 <= u)
            near_mu = 0.5;
        else
            near_mu = (std::fabs(l - 0.5) <= std::fabs(u - 0.5)) ? l : u;
        hi += point_fuzz(near_mu);
    }
    return {lo / double(n), hi / double(n)};
}

std::pair<double, double> it2_fuzziness(const IT2TrFN& f, std::size_t grid_n) {
    return it2_fuzziness(SampledFOU::from(f, grid_n));
}

double scalar_fuzziness(const SampledFOU& fou, FuzzinessCollapse mode) {
    auto [lo, hi] = it2_fuzziness(fou);
    switch (mode) {
        case FuzzinessCollapse::Left: return lo;
        case FuzzinessCollapse::Right: return hi;
        case FuzzinessCollapse::Midpoint: break;
    }
    return 0.5 * (lo + hi);
}

double scalar_fuzziness(const IT2TrFN& f, FuzzinessCollapse mode, std::size_t grid_n) {
    return scalar_fuzziness(SampledFOU::from(f, grid_n), mode);
}

}  // namespace t2h
