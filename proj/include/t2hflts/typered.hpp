#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "t2hflts/trapezoid.hpp"

namespace t2h {

// Smallest / largest value of sum(x_i * w_i) / sum(w_i) with each w_i ranging
// over [w_lo_i, w_hi_i].  The xs must be sorted ascending.  Karnik-Mendel style
// switch-point iteration, enhanced initialization; converges in a handful of
// rounds for the sizes used here.
struct IntervalWeightedAverage {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t switch_lo = 0;  // index k: lo uses hi-weights up to k, lo-weights after
    std::size_t switch_hi = 0;
};

IntervalWeightedAverage interval_weighted_average(const std::vector<double>& xs,
                                                  const std::vector<double>& w_lo,
                                                  const std::vector<double>& w_hi,
                                                  double tol = 1e-12,
                                                  std::size_t max_iter = 100);

// Centroid type reduction of a sampled FOU: [c_l, c_r] from the enhanced
// Karnik-Mendel iteration over the discretized membership tracks.
std::pair<double, double> ekm_centroid(const SampledFOU& fou, double tol = 1e-12,
                                       std::size_t max_iter = 100);

std::pair<double, double> ekm_centroid(const IT2TrFN& f, std::size_t grid_n = 1001,
                                       double tol = 1e-12, std::size_t max_iter = 100);

inline double centroid_mid(const IT2TrFN& f, std::size_t grid_n = 1001) {
    auto [lo, hi] = ekm_centroid(f, grid_n);
    return 0.5 * (lo + hi);
}

}  // namespace t2h
