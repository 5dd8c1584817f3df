#pragma once

#include <vector>

#include "t2hflts/fuzziness.hpp"
#include "t2hflts/linguistic.hpp"

namespace t2h {

struct EntropyReport {
    double e_f = 0.0;   // fuzziness carried by the member terms
    double e_h = 0.0;   // spread of the hesitant set
    double beta = 0.0;  // weight of hesitation for the expression shape
    double e_c = 0.0;   // combined measure
};

// Mean pairwise index gap of the set, scaled to [0,1].  Singletons carry no
// hesitation and return 0.
double hesitant_entropy(const T2HFLTS& h, int g);

// Hesitation weight by expression shape.  Single comes first: a degenerate
// Between(i,i) is still weighted 0 only when the expression was a bare term.
double hesitation_weight(const CLE& cle, int g);

double t2_fuzzy_entropy(const T2HFLTS& h, const LinguisticTermSet& lts,
                        FuzzinessCollapse mode = FuzzinessCollapse::Midpoint,
                        std::size_t grid_n = 1001);

// Same measure with caller-supplied per-term fuzziness values, one per index.
double t2_fuzzy_entropy(const std::vector<double>& term_fuzziness,
                        const std::vector<int>& indices, int g);

double comprehensive_entropy(double e_f, double e_h, double beta);

// Index-only baselines, used for comparison runs.
double t1_fuzzy_entropy(const T2HFLTS& h, int g);
double t1_comprehensive(const T2HFLTS& h, int g, double beta);

EntropyReport entropy_report(const CLE& cle, const LinguisticTermSet& lts,
                             FuzzinessCollapse mode = FuzzinessCollapse::Midpoint,
                             std::size_t grid_n = 1001);

enum class SweepCase { GrowingSet, SlidingSingleton };

struct SweepRow {
    int k = 0;
    double e_f = 0.0;
    double e_h = 0.0;
    double beta = 0.0;
    double e_c = 0.0;
};

std::vector<SweepRow> entropy_sweep(const LinguisticTermSet& lts, SweepCase mode,
                                    FuzzinessCollapse collapse = FuzzinessCollapse::Midpoint,
                                    std::size_t grid_n = 1001);

}  // namespace t2h
