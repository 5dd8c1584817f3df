#include "t2hflts/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "t2hflts/errors.hpp"

namespace t2h {

namespace {

void check_band(const Band4& b, const char* which) {
    for (int i = 0; i < 3; ++i)
        if (b.a[std::size_t(i)] > b.a[std::size_t(i + 1)] + 1e-12)
            throw ValidationError(std::string(which) + " band knots not ordered");
    if (b.h1 <= 0.0 || b.h1 > 1.0 || b.h2 <= 0.0 || b.h2 > 1.0)
        throw ValidationError(std::string(which) + " band heights outside (0,1]");
}

Band4 band_product(const Band4& x, const Band4& y) {
    Band4 out;
    for (std::size_t i = 0; i < 4; ++i) out.a[i] = x.a[i] * y.a[i];
    out.h1 = std::min(x.h1, y.h1);
    out.h2 = std::min(x.h2, y.h2);
    return out;
}

Band4 band_extreme(const std::vector<const Band4*>& bands, bool take_max) {
    Band4 out = *bands.front();
    for (std::size_t k = 1; k < bands.size(); ++k) {
        const Band4& b = *bands[k];
        for (std::size_t i = 0; i < 4; ++i)
            out.a[i] = take_max ? std::max(out.a[i], b.a[i]) : std::min(out.a[i], b.a[i]);
        out.h1 = std::min(out.h1, b.h1);
        out.h2 = std::min(out.h2, b.h2);
    }
    return out;
}

}  // namespace

void NineParamIT2::validate() const {
    check_band(upper, "upper");
    check_band(lower, "lower");
}

NineParamIT2 topsis_weighted(const NineParamIT2& e, const NineParamIT2& w) {
    return NineParamIT2{band_product(e.upper, w.upper), band_product(e.lower, w.lower)};
}

std::pair<NineParamIT2, NineParamIT2> topsis_ideals(const std::vector<NineParamIT2>& column) {
    if (column.empty()) throw ValidationError("ideals of an empty column");
    std::vector<const Band4*> uppers, lowers;
    for (const auto& e : column) {
        uppers.push_back(&e.upper);
        lowers.push_back(&e.lower);
    }
    NineParamIT2 pos{band_extreme(uppers, true), band_extreme(lowers, true)};
    NineParamIT2 neg{band_extreme(uppers, false), band_extreme(lowers, false)};
    return {pos, neg};
}

double likelihood_index(const NineParamIT2& x, const NineParamIT2& y) {
    const auto& xu = x.upper.a;
    const auto& xl = x.lower.a;
    const auto& yu = y.upper.a;
    const auto& yl = y.lower.a;
    const double hxu = x.upper.height(), hxl = x.lower.height();
    const double hyu = y.upper.height(), hyl = y.lower.height();

    double num_m = (yl[3] - xu[0]) + 2.0 * std::max(hyu - hxl, 0.0);
    double den_m = (xu[3] - xu[0]) + (yl[3] - yl[0]) + 2.0 * std::fabs(hyu - hxl);
    for (std::size_t z = 0; z < 4; ++z) {
        num_m += std::max(yu[z] - xl[z], 0.0);
        den_m += std::fabs(yu[z] - xl[z]);
    }
    double num_n = (yu[3] - xl[0]) + 2.0 * std::max(hyl - hxu, 0.0);
    double den_n = (xl[3] - xl[0]) + (yu[3] - yu[0]) + 2.0 * std::fabs(hyl - hxu);
    for (std::size_t z = 0; z < 4; ++z) {
        num_n += std::max(yl[z] - xu[z], 0.0);
        den_n += std::fabs(yl[z] - xu[z]);
    }
    if (den_m <= 0.0 || den_n <= 0.0)
        throw NumericError("likelihood comparison is degenerate: identical point sets");

    const double li_minus = std::max(1.0 - std::max(num_m / den_m, 0.0), 0.0);
    const double li_plus = std::max(1.0 - std::max(num_n / den_n, 0.0), 0.0);
    return 0.5 * (li_minus + li_plus);
}

double closeness(const std::vector<double>& li_pos, const std::vector<double>& li_neg) {
    if (li_pos.empty() || li_pos.size() != li_neg.size())
        throw ValidationError("closeness needs matching comparison rows");
    const double pos = std::accumulate(li_pos.begin(), li_pos.end(), 0.0);
    const double neg = std::accumulate(li_neg.begin(), li_neg.end(), 0.0);
    if (pos + neg <= 0.0) throw NumericError("closeness undefined: all comparisons zero");
    return neg / (pos + neg);
}

NineParamIT2 wlq_scale(const NineParamIT2& e, double lambda) {
    if (lambda < 0.0) throw ValidationError("negative weight");
    NineParamIT2 out = e;
    for (std::size_t i = 0; i < 4; ++i) {
        out.upper.a[i] *= lambda;
        out.lower.a[i] *= lambda;
    }
    return out;
}

NineParamIT2 wlq_add(const NineParamIT2& a, const NineParamIT2& b) {
    NineParamIT2 out;
    for (std::size_t i = 0; i < 4; ++i) {
        out.upper.a[i] = a.upper.a[i] + b.upper.a[i];
        out.lower.a[i] = a.lower.a[i] + b.lower.a[i];
    }
    out.upper.h1 = std::min(a.upper.h1, b.upper.h1);
    out.upper.h2 = std::min(a.upper.h2, b.upper.h2);
    out.lower.h1 = std::min(a.lower.h1, b.lower.h1);
    out.lower.h2 = std::min(a.lower.h2, b.lower.h2);
    return out;
}

std::vector<std::vector<NineParamIT2>> wlq_collect(
    const std::vector<std::vector<std::vector<NineParamIT2>>>& tensor,
    const std::vector<double>& lambda) {
    if (tensor.empty() || tensor.size() != lambda.size())
        throw ValidationError("one weight per DMR required");
    const std::size_t alts = tensor.front().size();
    std::vector<std::vector<NineParamIT2>> out(alts);
    for (std::size_t a = 0; a < alts; ++a) {
        const std::size_t crits = tensor.front()[a].size();
        for (std::size_t c = 0; c < crits; ++c) {
            NineParamIT2 acc = wlq_scale(tensor[0][a][c], lambda[0]);
            for (std::size_t d = 1; d < tensor.size(); ++d) {
                if (tensor[d].size() != alts || tensor[d][a].size() != crits)
                    throw ValidationError("ragged decision tensor at DMR " +
                                          std::to_string(d + 1));
                acc = wlq_add(acc, wlq_scale(tensor[d][a][c], lambda[d]));
            }
            out[a].push_back(acc);
        }
    }
    return out;
}

double wlq_rank_value(const NineParamIT2& e) {
    const auto band_terms = [](const Band4& b) {
        double m = 0.0, s = 0.0;
        for (std::size_t p = 0; p < 3; ++p) {
            m += 0.5 * (b.a[p] + b.a[p + 1]);
            s += 0.5 * std::fabs(b.a[p + 1] - b.a[p]);
        }
        const double mean = std::accumulate(b.a.begin(), b.a.end(), 0.0) / 4.0;
        double var = 0.0;
        for (double v : b.a) var += (v - mean) * (v - mean);
        s += std::sqrt(var / 4.0);
        return std::pair{m, s};
    };
    const auto [mu, su] = band_terms(e.upper);
    const auto [ml, sl] = band_terms(e.lower);
    return (mu + ml) - 0.25 * (su + sl) + e.upper.h1 + e.upper.h2 + e.lower.h1 +
           e.lower.h2;
}

namespace {

// Fit one edge knot of a trapezoid to a sampled track by golden-section on
// the squared error over the edge's grid range.
double fit_edge(const std::vector<double>& grid, const std::vector<double>& mu,
                double plateau_x, double h, bool left_edge, double search_lo,
                double search_hi) {
    const auto sse = [&](double knot) {
        double acc = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double x = grid[i];
            const bool in_range = left_edge ? (x <= plateau_x) : (x >= plateau_x);
            if (!in_range) continue;
            double fit;
            if (left_edge)
                fit = x <= knot ? 0.0
                                : (plateau_x > knot ? h * (x - knot) / (plateau_x - knot) : h);
            else
                fit = x >= knot ? 0.0
                                : (knot > plateau_x ? h * (knot - x) / (knot - plateau_x) : h);
            const double d = fit - mu[i];
            acc += d * d;
        }
        return acc;
    };
    constexpr double kPhi = 0.6180339887498949;
    double a = search_lo, b = search_hi;
    double x1 = b - kPhi * (b - a), x2 = a + kPhi * (b - a);
    double f1 = sse(x1), f2 = sse(x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kPhi * (b - a);
            f1 = sse(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kPhi * (b - a);
            f2 = sse(x2);
        }
    }
    return 0.5 * (a + b);
}

Band4 fit_band(const SampledFOU& fou) {
    const auto& grid = fou.grid;
    const auto& mu = fou.lower;
    const double h = *std::max_element(mu.begin(), mu.end());
    if (h <= 0.0) throw NumericError("cannot fit a trapezoid to a zero track");

    std::size_t bi = 0, ci = mu.size() - 1;
    while (mu[bi] < h - 1e-9) ++bi;
    while (mu[ci] < h - 1e-9) --ci;
    std::size_t lo = 0, hi = mu.size() - 1;
    while (lo < bi && mu[lo] <= 0.0) ++lo;
    while (hi > ci && mu[hi] <= 0.0) --hi;

    Band4 out;
    out.a[1] = grid[bi];
    out.a[2] = grid[ci];
    out.h1 = out.h2 = h;
    out.a[0] = (lo == 0 && mu[0] > 0.0)
                   ? grid[0]
                   : fit_edge(grid, mu, grid[bi], h, true, grid[lo > 0 ? lo - 1 : 0], grid[bi]);
    out.a[3] = (hi == mu.size() - 1 && mu.back() > 0.0)
                   ? grid.back()
                   : fit_edge(grid, mu, grid[ci], h, false, grid[ci],
                              grid[hi < mu.size() - 1 ? hi + 1 : mu.size() - 1]);
    return out;
}

Band4 band_of(const Trapezoid& t) {
    return Band4{{t.a, t.b, t.c, t.d}, t.h, t.h};
}

}  // namespace

NineParamIT2 to_nine_param(const IT2TrFN& f) {
    return NineParamIT2{band_of(f.umf), band_of(f.lmf)};
}

NineParamIT2 to_nine_param(const Representation& rep) {
    if (const auto* term = std::get_if<IT2TrFN>(&rep)) return to_nine_param(*term);
    const auto& env = std::get<T2Envelope>(rep);
    NineParamIT2 out{band_of(env.umf), fit_band(env.fou)};
    out.validate();
    return out;
}

}  // namespace t2h
