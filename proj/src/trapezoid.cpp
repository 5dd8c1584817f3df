#include "t2hflts/trapezoid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "t2hflts/errors.hpp"

namespace t2h {

Trapezoid::Trapezoid(double a_, double b_, double c_, double d_, double h_)
    : a(a_), b(b_), c(c_), d(d_), h(h_) {
    if (!(a <= b && b <= c && c <= d))
        throw ValidationError("trapezoid knots not ordered: (" + std::to_string(a) + ", " +
                              std::to_string(b) + ", " + std::to_string(c) + ", " +
                              std::to_string(d) + ")");
    if (!(h > 0.0 && h <= 1.0))
        throw ValidationError("trapezoid height out of (0,1]: " + std::to_string(h));
}

double Trapezoid::membership(double x) const {
    if (x < a || x > d) return 0.0;
    if (x >= b && x <= c) return h;
    if (x < b) return h * (x - a) / (b - a);  // b > a here, else x in plateau branch
    return h * (d - x) / (d - c);
}

std::pair<double, double> Trapezoid::alpha_cut(double level) const {
    level = std::clamp(level, 0.0, h);
    const double t = level / h;
    return {a + t * (b - a), d - t * (d - c)};
}

IT2TrFN::IT2TrFN(Trapezoid upper, Trapezoid lower) : umf(upper), lmf(lower) {
    if (!nested())
        throw ValidationError("FOU not nested: lower membership exceeds upper");
}

bool IT2TrFN::nested(double tol) const {
    if (lmf.a < umf.a - tol || lmf.d > umf.d + tol) return false;
    if (lmf.h > umf.h + tol) return false;
    // piecewise-linear vs piecewise-linear: checking both knot sets suffices
    for (double x : {lmf.a, lmf.b, lmf.c, lmf.d, umf.a, umf.b, umf.c, umf.d})
        if (lmf.membership(x) > umf.membership(x) + tol) return false;
    return true;
}

IT2TrFN IT2TrFN::crisp(double value) {
    Trapezoid t(value, value, value, value, 1.0);
    return IT2TrFN(t, t);
}

std::vector<double> uniform_grid(std::size_t n) {
    if (n < 3) throw ValidationError("grid needs at least 3 points");
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = double(i) / double(n - 1);
    return xs;
}

SampledFOU SampledFOU::from(const IT2TrFN& f, std::size_t n) {
    SampledFOU out;
    out.grid = uniform_grid(n);
    out.lower.resize(n);
    out.upper.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.lower[i] = f.lmf.membership(out.grid[i]);
        out.upper[i] = f.umf.membership(out.grid[i]);
    }
    out.check_nesting();
    return out;
}

SampledFOU SampledFOU::from_tracks(std::vector<double> grid, std::vector<double> lower,
                                   std::vector<double> upper) {
    if (grid.size() < 3 || grid.size() != lower.size() || grid.size() != upper.size())
        throw ValidationError("sampled FOU tracks must share a grid of >= 3 points");
    SampledFOU out{std::move(grid), std::move(lower), std::move(upper)};
    out.check_nesting();
    return out;
}

void SampledFOU::check_nesting(double tol) const {
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (lower[i] < -tol || upper[i] > 1.0 + tol || lower[i] > upper[i] + tol)
            throw NumericError("FOU nesting violated at x=" + std::to_string(grid[i]) +
                               " (lower=" + std::to_string(lower[i]) +
                               ", upper=" + std::to_string(upper[i]) + ")");
    }
}

}  // namespace t2h
