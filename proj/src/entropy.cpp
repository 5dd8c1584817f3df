#include "t2hflts/entropy.hpp"

#include <cmath>
#include <numbers>

#include "t2hflts/errors.hpp"

namespace t2h {

namespace {

constexpr double kPi = std::numbers::pi;

inline double index_parabola(int idx, int g) {
    const double r = double(idx) / double(g);
    return 4.0 * r * (1.0 - r);
}

}  // namespace

double hesitant_entropy(const T2HFLTS& h, int g) {
    if (h.is_empty()) throw ValidationError("hesitant entropy of an empty set");
    const int l = h.size();
    if (l == 1) return 0.0;
    double acc = 0.0;
    const auto idx = h.indices();
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) acc += double(idx[std::size_t(j)] - idx[std::size_t(i)]);
    return (1.0 / double(g)) * (2.0 / (double(l) * double(l - 1))) * acc;
}

double hesitation_weight(const CLE& cle, int g) {
    const double gd = double(g);
    switch (cle.shape) {
        case CLE::Shape::Single: return 0.0;
        case CLE::Shape::MoreThan: return 0.5 * std::cos(kPi * cle.i / gd) + 0.5;
        case CLE::Shape::LessThan: return 0.5 * std::sin(kPi * cle.i / gd - kPi / 2.0) + 0.5;
        case CLE::Shape::Between:
            return 0.5 * (std::cos(kPi * cle.i / gd) - std::cos(kPi * cle.j / gd));
    }
    throw ValidationError("unreachable expression shape");
}

double t2_fuzzy_entropy(const std::vector<double>& term_fuzziness,
                        const std::vector<int>& indices, int g) {
    if (indices.empty()) throw ValidationError("fuzzy entropy of an empty set");
    if (term_fuzziness.size() != indices.size())
        throw ValidationError("one fuzziness value per index required");
    double acc = 0.0;
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] < 0 || indices[k] > g)
            throw ValidationError("term index outside the scale");
        acc += term_fuzziness[k] * index_parabola(indices[k], g);
    }
    return acc / double(indices.size());
}

double t2_fuzzy_entropy(const T2HFLTS& h, const LinguisticTermSet& lts,
                        FuzzinessCollapse mode, std::size_t grid_n) {
    if (h.is_empty()) throw ValidationError("fuzzy entropy of an empty set");
    if (h.g != lts.g()) throw ValidationError("hesitant set and scale disagree on g");
    std::vector<double> fs;
    for (int k : h.indices())
        fs.push_back(scalar_fuzziness(lts.term(k).band, mode, grid_n));
    return t2_fuzzy_entropy(fs, h.indices(), h.g);
}

double comprehensive_entropy(double e_f, double e_h, double beta) {
    if (e_f < 0.0 || e_f > 1.0 || e_h < 0.0 || e_h > 1.0 || beta < 0.0 || beta > 1.0)
        throw ValidationError("entropy components must lie in [0,1]");
    const double t = beta * e_h;
    return (e_f + t) / (1.0 + t);
}

double t1_fuzzy_entropy(const T2HFLTS& h, int g) {
    if (h.is_empty()) throw ValidationError("fuzzy entropy of an empty set");
    double acc = 0.0;
    for (int k : h.indices()) acc += index_parabola(k, g);
    return acc / double(h.size());
}

double t1_comprehensive(const T2HFLTS& h, int g, double beta) {
    const double e_f = t1_fuzzy_entropy(h, g);
    const double e_h = hesitant_entropy(h, g);
    return comprehensive_entropy(e_f, e_h, beta);
}

EntropyReport entropy_report(const CLE& cle, const LinguisticTermSet& lts,
                             FuzzinessCollapse mode, std::size_t grid_n) {
    const int g = lts.g();
    const T2HFLTS h = transform(cle, g);
    EntropyReport r;
    r.e_f = t2_fuzzy_entropy(h, lts, mode, grid_n);
    r.e_h = hesitant_entropy(h, g);
    r.beta = hesitation_weight(cle, g);
    r.e_c = comprehensive_entropy(r.e_f, r.e_h, r.beta);
    return r;
}

std::vector<SweepRow> entropy_sweep(const LinguisticTermSet& lts, SweepCase mode,
                                    FuzzinessCollapse collapse, std::size_t grid_n) {
    const int g = lts.g();
    std::vector<SweepRow> rows;
    rows.reserve(std::size_t(g) + 1);
    for (int k = 0; k <= g; ++k) {
        CLE cle;
        if (mode == SweepCase::GrowingSet)
            cle = (k == 0) ? CLE{CLE::Shape::Single, 0, 0} : CLE{CLE::Shape::LessThan, k, k};
        else
            cle = CLE{CLE::Shape::Single, k, k};
        const EntropyReport r = entropy_report(cle, lts, collapse, grid_n);
        rows.push_back(SweepRow{k, r.e_f, r.e_h, r.beta, r.e_c});
    }
    return rows;
}

}  // namespace t2h
