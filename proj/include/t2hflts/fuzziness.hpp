#pragma once

#include <cstddef>
#include <utility>

#include "t2hflts/trapezoid.hpp"

namespace t2h {

// Mean distance of the membership track from a crisp set, sampled on the unit
// grid: (1/N) sum(1 - |2 mu - 1|).  Zero for crisp sets, one for mu == 1/2.
double yager_fuzziness(const Trapezoid& t, std::size_t grid_n = 1001);

// Fuzziness interval [f_l, f_r] of an FOU.  At each grid point the bound
// farther from 1/2 gives one extreme of the pointwise fuzziness and the bound
// nearer to 1/2 (or 1/2 itself when the FOU straddles it) gives the other.
std::pair<double, double> it2_fuzziness(const SampledFOU& fou);
std::pair<double, double> it2_fuzziness(const IT2TrFN& f, std::size_t grid_n = 1001);

enum class FuzzinessCollapse { Midpoint, Right, Left };

double scalar_fuzziness(const SampledFOU& fou,
                        FuzzinessCollapse mode = FuzzinessCollapse::Midpoint);
double scalar_fuzziness(const IT2TrFN& f,
                        FuzzinessCollapse mode = FuzzinessCollapse::Midpoint,
                        std::size_t grid_n = 1001);

}  // namespace t2h
