#include "t2hflts/aggregation.hpp"

#include <algorithm>
#include <cmath>

#include "t2hflts/errors.hpp"
#include "t2hflts/typered.hpp"

namespace t2h {

T1Track::T1Track(const Trapezoid& t) : trap_(t), height_(t.h) {}

T1Track::T1Track(std::vector<double> grid, std::vector<double> mu)
    : grid_(std::move(grid)), mu_(std::move(mu)) {
    if (grid_.size() < 3 || grid_.size() != mu_.size())
        throw ValidationError("sampled track needs matching grid and values");
    height_ = *std::max_element(mu_.begin(), mu_.end());
    if (height_ <= 0.0) throw ValidationError("sampled track is identically zero");
}

double T1Track::membership(double x) const {
    if (trap_) return trap_->membership(x);
    if (x <= grid_.front()) return x < grid_.front() ? 0.0 : mu_.front();
    if (x >= grid_.back()) return x > grid_.back() ? 0.0 : mu_.back();
    const auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
    const std::size_t k = std::size_t(it - grid_.begin()) - 1;
    const double t = (x - grid_[k]) / (grid_[k + 1] - grid_[k]);
    return mu_[k] + t * (mu_[k + 1] - mu_[k]);
}

std::pair<double, double> T1Track::alpha_cut(double level) const {
    level = std::clamp(level, 0.0, height_);
    if (trap_) return trap_->alpha_cut(level);

    const std::size_t n = grid_.size();
    if (level <= 0.0) {
        // cut at zero is the support closure, matching the trapezoid case
        std::size_t i = 0;
        while (i < n && mu_[i] <= 0.0) ++i;
        std::size_t j = n;
        while (j > 0 && mu_[j - 1] <= 0.0) --j;
        return {grid_[i == 0 ? 0 : i - 1], grid_[j == n ? n - 1 : j]};
    }
    // leftmost crossing
    std::size_t i = 0;
    while (i < n && mu_[i] < level) ++i;
    if (i == n) throw NumericError("level cut above the track height");
    double left;
    if (i == 0 || mu_[i] == level || mu_[i] == mu_[i - 1]) {
        left = grid_[i];
    } else {
        const double t = (level - mu_[i - 1]) / (mu_[i] - mu_[i - 1]);
        left = grid_[i - 1] + t * (grid_[i] - grid_[i - 1]);
    }
    // rightmost crossing
    std::size_t j = n;
    while (j > 0 && mu_[j - 1] < level) --j;
    const std::size_t r = j - 1;
    double right;
    if (r == n - 1 || mu_[r] == level || mu_[r] == mu_[r + 1]) {
        right = grid_[r];
    } else {
        const double t = (level - mu_[r + 1]) / (mu_[r] - mu_[r + 1]);
        right = grid_[r + 1] - t * (grid_[r + 1] - grid_[r]);
    }
    return {left, right};
}

IT2Tracks IT2Tracks::from(const IT2TrFN& f) {
    return IT2Tracks{T1Track(f.umf), T1Track(f.lmf)};
}

IT2Tracks IT2Tracks::from(const T2Envelope& env) {
    return IT2Tracks{T1Track(env.umf), T1Track(env.fou.grid, env.fou.lower)};
}

IT2Tracks IT2Tracks::from(const Representation& rep) {
    if (const auto* term = std::get_if<IT2TrFN>(&rep)) return from(*term);
    return from(std::get<T2Envelope>(rep));
}

IT2Tracks IT2Tracks::crisp(double v) { return from(IT2TrFN::crisp(v)); }

namespace {

struct Ladder {
    std::vector<double> levels;
    std::vector<double> lo, hi;  // cut endpoints per level
};

// Membership at x reconstructed from a ladder: the level at which the rising
// edge (lo, ascending) or falling edge (hi, descending) passes x.
double ladder_membership(const Ladder& lad, double x) {
    const double cap = lad.levels.back();

    double rising;
    if (x < lad.lo.front()) {
        rising = -1.0;  // outside support
    } else if (x >= lad.lo.back()) {
        rising = cap;
    } else {
        const auto it = std::upper_bound(lad.lo.begin(), lad.lo.end(), x);
        const std::size_t k = std::size_t(it - lad.lo.begin()) - 1;
        const double span = lad.lo[k + 1] - lad.lo[k];
        const double t = span > 0.0 ? (x - lad.lo[k]) / span : 1.0;
        rising = lad.levels[k] + t * (lad.levels[k + 1] - lad.levels[k]);
    }

    double falling;
    if (x > lad.hi.front()) {
        falling = -1.0;
    } else if (x <= lad.hi.back()) {
        falling = cap;
    } else {
        const auto it = std::upper_bound(lad.hi.begin(), lad.hi.end(), x,
                                         [](double a, double b) { return a > b; });
        const std::size_t k = std::size_t(it - lad.hi.begin()) - 1;
        const double span = lad.hi[k] - lad.hi[k + 1];
        const double t = span > 0.0 ? (lad.hi[k] - x) / span : 1.0;
        falling = lad.levels[k] + t * (lad.levels[k + 1] - lad.levels[k]);
    }

    return std::max(0.0, std::min(rising, falling));
}

}  // namespace

T1Track fwa(const std::vector<T1Track>& xs, const std::vector<T1Track>& ws,
            std::size_t levels, std::size_t grid_n) {
    if (xs.empty() || xs.size() != ws.size())
        throw ValidationError("weighted average needs matching value and weight counts");
    if (levels < 2) throw ValidationError("ladder needs at least 2 levels");

    double cap = 1.0;
    for (const auto& x : xs) cap = std::min(cap, x.height());
    for (const auto& w : ws) cap = std::min(cap, w.height());

    const std::size_t n = xs.size();
    Ladder lad;
    lad.levels.reserve(levels);
    lad.lo.reserve(levels);
    lad.hi.reserve(levels);

    struct Cell {
        double x;
        double wl, wh;
    };
    const auto bound = [&](std::vector<Cell> cells, bool upper) {
        std::sort(cells.begin(), cells.end(),
                  [](const Cell& a, const Cell& b) { return a.x < b.x; });
        std::vector<double> cx(n), cwl(n), cwh(n);
        for (std::size_t i = 0; i < n; ++i) {
            cx[i] = cells[i].x;
            cwl[i] = cells[i].wl;
            cwh[i] = cells[i].wh;
        }
        const auto r = interval_weighted_average(cx, cwl, cwh);
        return upper ? r.hi : r.lo;
    };

    for (std::size_t k = 0; k < levels; ++k) {
        const double lev = cap * double(k) / double(levels - 1);
        std::vector<Cell> lefts(n), rights(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto wcut = ws[i].alpha_cut(lev);
            const auto xcut = xs[i].alpha_cut(lev);
            lefts[i] = Cell{xcut.first, wcut.first, wcut.second};
            rights[i] = Cell{xcut.second, wcut.first, wcut.second};
        }
        const double lo = bound(std::move(lefts), false);
        const double hi = bound(std::move(rights), true);

        lad.levels.push_back(lev);
        // cuts shrink as the level rises; trim float noise so reconstruction
        // sees monotone edges
        lad.lo.push_back(lad.lo.empty() ? lo : std::max(lo, lad.lo.back()));
        lad.hi.push_back(lad.hi.empty() ? hi : std::min(hi, lad.hi.back()));
        if (lad.lo.back() > lad.hi.back()) {
            const double mid = 0.5 * (lad.lo.back() + lad.hi.back());
            lad.lo.back() = lad.hi.back() = mid;
        }
    }

    const auto grid = uniform_grid(grid_n);
    std::vector<double> mu(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) mu[i] = ladder_membership(lad, grid[i]);
    // the peak is flat on [lo.back(), hi.back()]; make sure sampling kept it
    if (*std::max_element(mu.begin(), mu.end()) <= 0.0) {
        // degenerate spike between grid points: pin the nearest sample
        const double peak = 0.5 * (lad.lo.back() + lad.hi.back());
        const std::size_t idx =
            std::size_t(std::llround(peak * double(grid.size() - 1)));
        mu[std::min(idx, grid.size() - 1)] = cap;
    }
    return T1Track(grid, std::move(mu));
}

SampledFOU lwa(const std::vector<IT2Tracks>& xs, const std::vector<IT2Tracks>& ws,
               std::size_t levels, std::size_t grid_n) {
    std::vector<T1Track> xu, xl, wu, wl;
    xu.reserve(xs.size());
    xl.reserve(xs.size());
    wu.reserve(ws.size());
    wl.reserve(ws.size());
    for (const auto& x : xs) {
        xu.push_back(x.upper);
        xl.push_back(x.lower);
    }
    for (const auto& w : ws) {
        wu.push_back(w.upper);
        wl.push_back(w.lower);
    }
    const T1Track upper = fwa(xu, wu, levels, grid_n);
    const T1Track lower = fwa(xl, wl, levels, grid_n);

    const auto grid = uniform_grid(grid_n);
    std::vector<double> lo(grid.size()), hi(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        hi[i] = upper.membership(grid[i]);
        // exact in the limit; clip the ladder-interpolation noise
        lo[i] = std::min(lower.membership(grid[i]), hi[i]);
    }
    return SampledFOU::from_tracks(grid, std::move(lo), std::move(hi));
}

std::vector<std::vector<SampledFOU>> aggregate_all(const RepTensor& reps,
                                                   const CriteriaWeights& ws,
                                                   std::size_t levels,
                                                   std::size_t grid_n) {
    if (reps.empty()) throw ValidationError("no responses to aggregate");
    std::vector<std::vector<SampledFOU>> out(reps.size());
    for (std::size_t d = 0; d < reps.size(); ++d) {
        if (reps[d].empty())
            throw ValidationError("DMR " + std::to_string(d + 1) + " has no responses");
        out[d].reserve(reps[d].size());
        for (std::size_t a = 0; a < reps[d].size(); ++a) {
            if (reps[d][a].size() != ws.size())
                throw ValidationError("DMR " + std::to_string(d + 1) + ", alternative " +
                                      std::to_string(a + 1) + ": expected " +
                                      std::to_string(ws.size()) + " criteria, found " +
                                      std::to_string(reps[d][a].size()));
            std::vector<IT2Tracks> cells;
            cells.reserve(ws.size());
            for (const auto& rep : reps[d][a]) cells.push_back(IT2Tracks::from(rep));
            out[d].push_back(lwa(cells, ws, levels, grid_n));
        }
    }
    return out;
}

}  // namespace t2h
