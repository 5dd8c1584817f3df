#pragma once

#include <cstddef>
#include <vector>

namespace t2h {

// Trapezoidal membership function on the universe axis.
// Knots a <= b <= c <= d, plateau height h in (0,1].
// Membership: 0 outside [a,d], h on [b,c], linear in between.
struct Trapezoid {
    double a = 0, b = 0, c = 0, d = 0;
    double h = 1.0;

    Trapezoid() = default;
    Trapezoid(double a_, double b_, double c_, double d_, double h_ = 1.0);

    double membership(double x) const;

    // [left, right] of the cut {x : membership(x) >= level}, level in [0, h].
    // Degenerate edges (a == b) give closed vertical sides.
    std::pair<double, double> alpha_cut(double level) const;

    double plateau_mid() const { return 0.5 * (b + c); }
    bool operator==(const Trapezoid&) const = default;
};

// Interval type-2 trapezoidal fuzzy number: FOU bounded by an upper and a
// lower trapezoid. lmf must be nested in umf (pointwise dominated).
struct IT2TrFN {
    Trapezoid umf;  // height 1 unless stated
    Trapezoid lmf;

    IT2TrFN() = default;
    IT2TrFN(Trapezoid upper, Trapezoid lower);

    // true iff lmf.membership(x) <= umf.membership(x) for all x
    // (checked at the knots of both trapezoids; sufficient for trapezoids)
    bool nested(double tol = 1e-12) const;

    static IT2TrFN crisp(double value);  // zero-width, for scalar weights
    bool operator==(const IT2TrFN&) const = default;
};

// Grid-sampled FOU on [0,1]: the discrete carrier for envelopes and
// type reduction. Invariant: 0 <= lower[i] <= upper[i] <= 1.
struct SampledFOU {
    std::vector<double> grid;
    std::vector<double> lower;
    std::vector<double> upper;

    static SampledFOU from(const IT2TrFN& f, std::size_t n = 1001);
    static SampledFOU from_tracks(std::vector<double> grid, std::vector<double> lower,
                                  std::vector<double> upper);

    std::size_t size() const { return grid.size(); }
    void check_nesting(double tol = 1e-9) const;  // throws NumericError on violation
};

std::vector<double> uniform_grid(std::size_t n);

}  // namespace t2h
