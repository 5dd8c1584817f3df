#pragma once

#include <array>
#include <utility>
#include <vector>

#include "t2hflts/envelope.hpp"

namespace t2h {

// Trapezoid band in the nine-parameter convention: four knots plus the
// membership values at the two inner knots.
struct Band4 {
    std::array<double, 4> a{};
    double h1 = 1.0;
    double h2 = 1.0;

    double height() const { return h1 < h2 ? h1 : h2; }
};

struct NineParamIT2 {
    Band4 upper;
    Band4 lower;

    void validate() const;  // ordered knots, heights in (0,1]
};

// Componentwise product with min heights, per band.
NineParamIT2 topsis_weighted(const NineParamIT2& e, const NineParamIT2& w);

// (positive ideal, negative ideal): componentwise max / min with min heights.
std::pair<NineParamIT2, NineParamIT2> topsis_ideals(const std::vector<NineParamIT2>& column);

// Likelihood of x >= y, averaged over the lower and upper comparison indices.
double likelihood_index(const NineParamIT2& x, const NineParamIT2& y);

// Closeness of one alternative given its comparison rows against the ideals.
double closeness(const std::vector<double>& li_pos, const std::vector<double>& li_neg);

NineParamIT2 wlq_scale(const NineParamIT2& e, double lambda);
NineParamIT2 wlq_add(const NineParamIT2& a, const NineParamIT2& b);

// tensor[dmr][alternative][criterion] -> collective matrix [alternative][criterion]
std::vector<std::vector<NineParamIT2>> wlq_collect(
    const std::vector<std::vector<std::vector<NineParamIT2>>>& tensor,
    const std::vector<double>& lambda);

double wlq_rank_value(const NineParamIT2& e);

// Envelope lower tracks may be non-trapezoidal; fit the four knots by least
// squares so the baseline methods can consume pipeline representations.
NineParamIT2 to_nine_param(const Representation& rep);
NineParamIT2 to_nine_param(const IT2TrFN& f);

}  // namespace t2h
