#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "t2hflts/envelope.hpp"
#include "t2hflts/trapezoid.hpp"

namespace t2h {

// A type-1 membership function, either an exact trapezoid or a sampled track
// on the unit grid.  Cuts of trapezoids are analytic; cuts of tracks are
// linearly interpolated at the level crossings.
class T1Track {
  public:
    explicit T1Track(const Trapezoid& t);
    T1Track(std::vector<double> grid, std::vector<double> mu);

    double height() const { return height_; }
    double membership(double x) const;
    // [left, right] of {x : mu(x) >= level}; level is clamped to [0, height]
    std::pair<double, double> alpha_cut(double level) const;

  private:
    std::optional<Trapezoid> trap_;
    std::vector<double> grid_, mu_;
    double height_ = 1.0;
};

struct IT2Tracks {
    T1Track upper;
    T1Track lower;

    static IT2Tracks from(const IT2TrFN& f);
    static IT2Tracks from(const T2Envelope& env);
    static IT2Tracks from(const Representation& rep);
    static IT2Tracks crisp(double v);
};

using CriteriaWeights = std::vector<IT2Tracks>;

// Fuzzy weighted average: at each ladder level the output interval is the
// range of sum(x*w)/sum(w) over the level cuts, found by switch-point search.
// The ladder has `levels` uniform steps from 0 up to the least input height,
// so the height break is always a ladder rung.
T1Track fwa(const std::vector<T1Track>& xs, const std::vector<T1Track>& ws,
            std::size_t levels = 101, std::size_t grid_n = 1001);

// Linguistic weighted average: upper band from upper bands, lower from lower.
SampledFOU lwa(const std::vector<IT2Tracks>& xs, const std::vector<IT2Tracks>& ws,
               std::size_t levels = 101, std::size_t grid_n = 1001);

// reps[dmr][alternative][criterion] -> one FOU per (dmr, alternative)
using RepTensor = std::vector<std::vector<std::vector<Representation>>>;

std::vector<std::vector<SampledFOU>> aggregate_all(const RepTensor& reps,
                                                   const CriteriaWeights& ws,
                                                   std::size_t levels = 101,
                                                   std::size_t grid_n = 1001);

}  // namespace t2h
