#pragma once

#include <variant>
#include <vector>

#include "t2hflts/entropy.hpp"
#include "t2hflts/linguistic.hpp"

namespace t2h {

enum class OwaKind { W1, W2 };

// W1 = (alpha, alpha(1-alpha), ..., alpha(1-alpha)^{n-2}, (1-alpha)^{n-1});
// W2 is W1 reversed.  Both sum to 1.
std::vector<double> owa_weights(OwaKind kind, std::size_t n, double alpha);

enum class ShoulderPolicy { Clamp, Plain };
enum class Band { Upper, Lower };

struct EnvelopeConfig {
    // inner-knot aggregation; calibrated against the worked five-term scale
    double alpha = 0.5417;
    // one-sided expressions concentrate mass near the scale edge, which needs
    // a separate, smaller parameter to match the worked values
    double shoulder_alpha = 0.25;
    OwaKind left_kind = OwaKind::W1;   // left inner knot, elements ascending
    OwaKind right_kind = OwaKind::W2;  // right inner knot, elements ascending
    ShoulderPolicy shoulder_policy = ShoulderPolicy::Clamp;
    std::size_t grid_n = 1001;
    FuzzinessCollapse collapse = FuzzinessCollapse::Left;
};

struct T2Envelope {
    Trapezoid umf;     // aggregated upper band
    Trapezoid lmf_t1;  // aggregated lower band before the entropy deduction
    SampledFOU fou;    // final tracks; lower = max{0, umf - max{umf - lmf_t1, e_c}}
    double e_c = 0.0;
    T2HFLTS source;
};

Trapezoid t1_envelope(const T2HFLTS& h, const LinguisticTermSet& lts,
                      const EnvelopeConfig& cfg, Band band,
                      CLE::Shape shape = CLE::Shape::Between);

T2Envelope t2_envelope(const T2HFLTS& h, const LinguisticTermSet& lts,
                       const EnvelopeConfig& cfg, CLE::Shape shape = CLE::Shape::Between);

// Single-term expressions reuse the term's own semantics; everything else
// gets an envelope.
using Representation = std::variant<IT2TrFN, T2Envelope>;

Representation represent_response(const CLE& cle, const LinguisticTermSet& lts,
                                  const EnvelopeConfig& cfg);

inline bool is_bypass(const Representation& r) {
    return std::holds_alternative<IT2TrFN>(r);
}

SampledFOU sample(const Representation& r, std::size_t grid_n = 1001);

}  // namespace t2h
