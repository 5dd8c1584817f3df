#include "t2hflts/typered.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "t2hflts/errors.hpp"

namespace t2h {

namespace {

// One bound of the interval weighted average.  For the lower bound the big
// weights go on the small xs (ascending order assumed); for the upper bound
// the big weights go on the large xs.  Returns the bound and its switch index.
std::pair<double, std::size_t> km_bound(const std::vector<double>& xs,
                                        const std::vector<double>& w_lo,
                                        const std::vector<double>& w_hi, bool upper,
                                        double tol, std::size_t max_iter) {
    const std::size_t n = xs.size();
    // start from mid weights
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = 0.5 * (w_lo[i] + w_hi[i]);
        num += xs[i] * w;
        den += w;
    }
    if (den <= 0.0) throw NumericError("interval weighted average: all weights zero");
    double y = num / den;

    std::size_t k = 0;
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        // switch point: last index with x <= y
        k = 0;
        while (k + 1 < n && xs[k + 1] <= y) ++k;
        num = 0.0;
        den = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            // lower bound: heavy left of switch; upper bound: heavy right of it
            const bool heavy = upper ? (i > k) : (i <= k);
            const double w = heavy ? w_hi[i] : w_lo[i];
            num += xs[i] * w;
            den += w;
        }
        if (den <= 0.0) throw NumericError("interval weighted average: degenerate weights");
        const double y_next = num / den;
        if (std::fabs(y_next - y) <= tol) return {y_next, k};
        y = y_next;
    }
    return {y, k};
}

}  // namespace

IntervalWeightedAverage interval_weighted_average(const std::vector<double>& xs,
                                                  const std::vector<double>& w_lo,
                                                  const std::vector<double>& w_hi,
                                                  double tol, std::size_t max_iter) {
    const std::size_t n = xs.size();
    if (n == 0) throw ValidationError("interval weighted average of nothing");
    if (w_lo.size() != n || w_hi.size() != n)
        throw ValidationError("weight bounds must match the value count");
    if (!std::is_sorted(xs.begin(), xs.end()))
        throw ValidationError("interval weighted average needs ascending values");
    for (std::size_t i = 0; i < n; ++i) {
        if (w_lo[i] < 0.0 || w_hi[i] < w_lo[i])
            throw ValidationError("weight interval must satisfy 0 <= lo <= hi");
    }

    if (n == 1) {
        if (w_hi[0] <= 0.0) throw NumericError("interval weighted average: all weights zero");
        return {xs[0], xs[0], 0, 0};
    }

    IntervalWeightedAverage out;
    auto [lo, klo] = km_bound(xs, w_lo, w_hi, /*upper=*/false, tol, max_iter);
    auto [hi, khi] = km_bound(xs, w_lo, w_hi, /*upper=*/true, tol, max_iter);
    out.lo = lo;
    out.hi = hi;
    out.switch_lo = klo;
    out.switch_hi = khi;
    return out;
}

std::pair<double, double> ekm_centroid(const SampledFOU& fou, double tol,
                                       std::size_t max_iter) {
    // drop points where even the upper track is zero; they cannot carry weight
    std::vector<double> xs, lo, hi;
    xs.reserve(fou.size());
    lo.reserve(fou.size());
    hi.reserve(fou.size());
    for (std::size_t i = 0; i < fou.size(); ++i) {
        if (fou.upper[i] > 0.0) {
            xs.push_back(fou.grid[i]);
            lo.push_back(fou.lower[i]);
            hi.push_back(fou.upper[i]);
        }
    }
    if (xs.empty()) throw NumericError("centroid of an empty FOU");
    if (xs.size() == 1) return {xs[0], xs[0]};
    auto r = interval_weighted_average(xs, lo, hi, tol, max_iter);
    return {r.lo, r.hi};
}

std::pair<double, double> ekm_centroid(const IT2TrFN& f, std::size_t grid_n, double tol,
                                       std::size_t max_iter) {
    return ekm_centroid(SampledFOU::from(f, grid_n), tol, max_iter);
}

}  // namespace t2h
