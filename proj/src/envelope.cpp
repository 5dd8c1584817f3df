#include "t2hflts/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "t2hflts/errors.hpp"

namespace t2h {

std::vector<double> owa_weights(OwaKind kind, std::size_t n, double alpha) {
    if (n == 0) throw ValidationError("OWA weights for zero elements");
    if (alpha < 0.0 || alpha > 1.0) throw ValidationError("OWA parameter outside [0,1]");
    std::vector<double> w(n);
    if (n == 1) {
        w[0] = 1.0;
    } else {
        double tail = 1.0;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            w[k] = alpha * tail;
            tail *= (1.0 - alpha);
        }
        w[n - 1] = tail;
    }
    const double sum = std::accumulate(w.begin(), w.end(), 0.0);
    if (std::fabs(sum - 1.0) > 1e-9)
        throw NumericError("OWA weights failed to normalize (sum " + std::to_string(sum) + ")");
    if (kind == OwaKind::W2) std::reverse(w.begin(), w.end());
    return w;
}

namespace {

CLE cle_for(const T2HFLTS& h, CLE::Shape shape) {
    switch (shape) {
        case CLE::Shape::Single: return CLE{shape, h.lo, h.lo};
        case CLE::Shape::MoreThan: return CLE{shape, h.lo, h.lo};
        case CLE::Shape::LessThan: return CLE{shape, h.hi, h.hi};
        case CLE::Shape::Between: return CLE{shape, h.lo, h.hi};
    }
    throw ValidationError("unreachable expression shape");
}

double dot(const std::vector<double>& w, const std::vector<double>& v) {
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * v[i];
    return acc;
}

}  // namespace

Trapezoid t1_envelope(const T2HFLTS& h, const LinguisticTermSet& lts,
                      const EnvelopeConfig& cfg, Band band, CLE::Shape shape) {
    if (h.is_empty()) throw ValidationError("envelope of an empty hesitant set");
    if (h.g != lts.g()) throw ValidationError("hesitant set and scale disagree on g");

    const auto band_of = [&](int k) -> const Trapezoid& {
        const IT2TrFN& t = lts.term(k).band;
        return band == Band::Upper ? t.umf : t.lmf;
    };

    if (h.size() == 1) return band_of(h.lo);

    const std::size_t n = std::size_t(h.size());
    double a = band_of(h.lo).a, d = band_of(h.lo).d, height = band_of(h.lo).h;
    std::vector<double> mids;
    mids.reserve(n);
    for (int k : h.indices()) {
        const Trapezoid& t = band_of(k);
        a = std::min(a, t.a);
        d = std::max(d, t.d);
        height = std::min(height, t.h);
        mids.push_back(t.plateau_mid());
    }
    std::sort(mids.begin(), mids.end());

    const bool shoulder =
        shape == CLE::Shape::MoreThan || shape == CLE::Shape::LessThan;
    const double alpha = shoulder ? cfg.shoulder_alpha : cfg.alpha;
    double b = dot(owa_weights(cfg.left_kind, n, alpha), mids);
    double c = dot(owa_weights(cfg.right_kind, n, alpha), mids);

    if (shoulder && cfg.shoulder_policy == ShoulderPolicy::Clamp) {
        if (shape == CLE::Shape::MoreThan)
            c = d;
        else
            b = a;
    }

    if (b > c + 1e-9)
        throw NumericError("envelope inner knots crossed (b=" + std::to_string(b) +
                           " > c=" + std::to_string(c) + "); check OWA configuration");
    b = std::clamp(b, a, d);
    c = std::clamp(c, b, d);
    return Trapezoid(a, b, c, d, height);
}

T2Envelope t2_envelope(const T2HFLTS& h, const LinguisticTermSet& lts,
                       const EnvelopeConfig& cfg, CLE::Shape shape) {
    const Trapezoid umf = t1_envelope(h, lts, cfg, Band::Upper, shape);
    const Trapezoid lmf1 = t1_envelope(h, lts, cfg, Band::Lower, shape);
    const EntropyReport rep = entropy_report(cle_for(h, shape), lts, cfg.collapse, cfg.grid_n);

    const auto grid = uniform_grid(cfg.grid_n);
    std::vector<double> lower(grid.size()), upper(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double u = umf.membership(grid[i]);
        const double deduction = std::max(u - lmf1.membership(grid[i]), rep.e_c);
        upper[i] = u;
        lower[i] = std::max(0.0, u - deduction);
    }
    return T2Envelope{umf, lmf1,
                      SampledFOU::from_tracks(grid, std::move(lower), std::move(upper)),
                      rep.e_c, h};
}

Representation represent_response(const CLE& cle, const LinguisticTermSet& lts,
                                  const EnvelopeConfig& cfg) {
    if (cle.shape == CLE::Shape::Single) return lts.term(cle.i).band;
    return t2_envelope(transform(cle, lts.g()), lts, cfg, cle.shape);
}

SampledFOU sample(const Representation& r, std::size_t grid_n) {
    if (const auto* term = std::get_if<IT2TrFN>(&r)) return SampledFOU::from(*term, grid_n);
    const auto& env = std::get<T2Envelope>(r);
    if (env.fou.size() == grid_n) return env.fou;
    // resample the closed form on the requested grid
    const auto grid = uniform_grid(grid_n);
    std::vector<double> lower(grid.size()), upper(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double u = env.umf.membership(grid[i]);
        const double deduction = std::max(u - env.lmf_t1.membership(grid[i]), env.e_c);
        upper[i] = u;
        lower[i] = std::max(0.0, u - deduction);
    }
    return SampledFOU::from_tracks(grid, std::move(lower), std::move(upper));
}

}  // namespace t2h
