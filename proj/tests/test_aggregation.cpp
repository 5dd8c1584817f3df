#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "t2hflts/aggregation.hpp"
#include "t2hflts/errors.hpp"
#include "t2hflts/pipeline.hpp"

using namespace t2h;

namespace {

const LtsDocument& shipped_doc() {
    static const LtsDocument doc = load_lts(std::string(T2H_SOURCE_DIR) + "/data/lts_default.json");
    return doc;
}

T1Track sampled_copy(const Trapezoid& t, std::size_t n = 1001) {
    const auto grid = uniform_grid(n);
    std::vector<double> mu(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) mu[i] = t.membership(grid[i]);
    return T1Track(grid, std::move(mu));
}

}  // namespace

TEST_SUITE("aggregation") {

TEST_CASE("sampled tracks reproduce trapezoid cuts and memberships") {
    const Trapezoid t(0.2, 0.4, 0.6, 0.9, 0.8);
    const T1Track exact(t);
    const T1Track sampled = sampled_copy(t);

    CHECK(exact.height() == doctest::Approx(0.8));
    CHECK(sampled.height() == doctest::Approx(0.8).epsilon(1e-9));

    for (double level : {0.0, 0.2, 0.4, 0.6, 0.8}) {
        const auto a = exact.alpha_cut(level);
        const auto b = sampled.alpha_cut(level);
        CHECK(std::fabs(a.first - b.first) <= 5e-3);
        CHECK(std::fabs(a.second - b.second) <= 5e-3);
    }
    for (double x : {0.21, 0.333, 0.5, 0.777, 0.899})
        CHECK(std::fabs(exact.membership(x) - sampled.membership(x)) <= 5e-3);

    // cuts above the height clamp to the peak cut
    const auto top = exact.alpha_cut(0.99);
    CHECK(top.first == doctest::Approx(0.4));
    CHECK(top.second == doctest::Approx(0.6));
}

TEST_CASE("averaging identical values returns them") {
    const Trapezoid t(0.1, 0.3, 0.5, 0.7, 1.0);
    oracle::Rng rng(0x5eed0201);
    std::vector<T1Track> xs(3, T1Track(t));
    std::vector<T1Track> ws;
    for (int i = 0; i < 3; ++i) ws.push_back(T1Track(oracle::random_trapezoid(rng, 0.1, 1.0)));

    const T1Track out = fwa(xs, ws);
    for (double level : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const auto want = t.alpha_cut(level);
        const auto got = out.alpha_cut(level);
        CHECK(std::fabs(got.first - want.first) <= 5e-3);
        CHECK(std::fabs(got.second - want.second) <= 5e-3);
    }
}

TEST_CASE("spike weights reduce to a plain weighted mean of cuts") {
    const std::vector<Trapezoid> ts = {Trapezoid(0.0, 0.1, 0.2, 0.4, 1.0),
                                       Trapezoid(0.3, 0.5, 0.6, 0.8, 1.0),
                                       Trapezoid(0.5, 0.7, 0.9, 1.0, 1.0)};
    const std::vector<double> w = {0.2, 0.5, 0.3};
    std::vector<T1Track> xs, ws;
    for (const auto& t : ts) xs.push_back(T1Track(t));
    for (double v : w) ws.push_back(T1Track(Trapezoid(v, v, v, v, 1.0)));

    const T1Track out = fwa(xs, ws);
    for (double level : {0.0, 0.5, 1.0}) {
        double lo = 0.0, hi = 0.0;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const auto cut = ts[i].alpha_cut(level);
            lo += w[i] * cut.first;
            hi += w[i] * cut.second;
        }
        const auto got = out.alpha_cut(level);
        CHECK(std::fabs(got.first - lo) <= 5e-3);
        CHECK(std::fabs(got.second - hi) <= 5e-3);
    }
}

TEST_CASE("cut bounds match a brute-force weight grid") {
    oracle::Rng rng(0x5eed0202);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = std::size_t(1 + rng.index(3));
        std::vector<Trapezoid> tx, tw;
        std::vector<T1Track> xs, ws;
        for (std::size_t i = 0; i < n; ++i) {
            tx.push_back(oracle::random_trapezoid(rng, 0.0, 1.0));
            tw.push_back(oracle::random_trapezoid(rng, 0.05, 1.0));
            xs.push_back(T1Track(tx.back()));
            ws.push_back(T1Track(tw.back()));
        }
        const T1Track out = fwa(xs, ws);
        for (double level : {0.0, 0.3, 0.7, 1.0}) {
            std::vector<std::pair<double, double>> x_cuts, w_cuts;
            for (std::size_t i = 0; i < n; ++i) {
                x_cuts.push_back(tx[i].alpha_cut(level));
                w_cuts.push_back(tw[i].alpha_cut(level));
            }
            const auto want = oracle::grid_fwa_bounds(x_cuts, w_cuts);
            const auto got = out.alpha_cut(level);
            CHECK(std::fabs(got.first - want.first) <= 5e-3);
            CHECK(std::fabs(got.second - want.second) <= 5e-3);
        }
    }
}

TEST_CASE("the average stays inside the hull of its inputs") {
    oracle::Rng rng(0x5eed0203);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = std::size_t(2 + rng.index(3));
        std::vector<T1Track> xs, ws;
        double lo = 1.0, hi = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const Trapezoid t = oracle::random_trapezoid(rng, 0.0, 1.0);
            lo = std::min(lo, t.a);
            hi = std::max(hi, t.d);
            xs.push_back(T1Track(t));
            ws.push_back(T1Track(oracle::random_trapezoid(rng, 0.05, 1.0)));
        }
        const auto support = fwa(xs, ws).alpha_cut(0.0);
        CHECK(support.first >= lo - 5e-3);
        CHECK(support.second <= hi + 5e-3);
    }
}

TEST_CASE("shifting one input right never moves the average left") {
    oracle::Rng rng(0x5eed0204);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = std::size_t(2 + rng.index(2));
        std::vector<Trapezoid> tx;
        std::vector<T1Track> xs, ws;
        for (std::size_t i = 0; i < n; ++i) {
            tx.push_back(oracle::random_trapezoid(rng, 0.0, 0.75));
            xs.push_back(T1Track(tx.back()));
            ws.push_back(T1Track(oracle::random_trapezoid(rng, 0.05, 1.0)));
        }
        const T1Track base = fwa(xs, ws);

        const std::size_t pick = std::size_t(rng.index(int(n)));
        const Trapezoid& s = tx[pick];
        const double delta = rng.uniform(0.01, 0.2);
        xs[pick] = T1Track(Trapezoid(s.a + delta, s.b + delta, s.c + delta, s.d + delta, s.h));
        const T1Track moved = fwa(xs, ws);

        for (double level : {0.0, 0.5, 1.0}) {
            const auto a = base.alpha_cut(level);
            const auto b = moved.alpha_cut(level);
            CHECK(b.first >= a.first - 5e-3);
            CHECK(b.second >= a.second - 5e-3);
        }
    }
}

TEST_CASE("band-wise average keeps the bands nested") {
    const auto& doc = shipped_doc();
    oracle::Rng rng(0x5eed0205);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<IT2Tracks> xs, ws;
        const std::size_t n = std::size_t(2 + rng.index(3));
        for (std::size_t i = 0; i < n; ++i) {
            const int lo = rng.index(5);
            const int hi = lo + rng.index(5 - lo);
            const CLE cle = lo == hi ? CLE{CLE::Shape::Single, lo, lo}
                                     : CLE{CLE::Shape::Between, lo, hi};
            xs.push_back(IT2Tracks::from(represent_response(cle, doc.lts, doc.envelope)));
            ws.push_back(IT2Tracks::from(oracle::random_it2(rng)));
        }
        const SampledFOU out = lwa(xs, ws);
        out.check_nesting();
        for (std::size_t i = 0; i < out.size(); ++i) CHECK(out.lower[i] <= out.upper[i] + 1e-12);
    }
}

TEST_CASE("averaging one cell with itself returns the cell") {
    const auto& doc = shipped_doc();
    const Representation rep =
        represent_response(CLE{CLE::Shape::Between, 1, 3}, doc.lts, doc.envelope);
    const IT2Tracks cell = IT2Tracks::from(rep);

    std::vector<IT2Tracks> xs(3, cell), ws(3, IT2Tracks::crisp(0.5));
    const SampledFOU out = lwa(xs, ws);
    const SampledFOU want = sample(rep);
    for (std::size_t i = 0; i < out.size(); i += 10) {
        CHECK(std::fabs(out.upper[i] - want.upper[i]) <= 5e-3);
        CHECK(std::fabs(out.lower[i] - want.lower[i]) <= 5e-3);
    }
}

TEST_CASE("tensor aggregation matches a single cell and ignores criteria order") {
    const auto& doc = shipped_doc();
    const Representation a = represent_response(CLE{CLE::Shape::Between, 2, 4}, doc.lts,
                                                doc.envelope);
    const Representation b = represent_response(CLE{CLE::Shape::Single, 1, 1}, doc.lts,
                                                doc.envelope);
    const Representation c = represent_response(CLE{CLE::Shape::LessThan, 1, 1}, doc.lts,
                                                doc.envelope);

    RepTensor one = {{{a}}};
    const auto lone = aggregate_all(one, {IT2Tracks::crisp(1.0)});
    const SampledFOU want = sample(a);
    for (std::size_t i = 0; i < want.size(); i += 10) {
        CHECK(std::fabs(lone[0][0].upper[i] - want.upper[i]) <= 5e-3);
        CHECK(std::fabs(lone[0][0].lower[i] - want.lower[i]) <= 5e-3);
    }

    const CriteriaWeights ws = {IT2Tracks::crisp(0.2), IT2Tracks::crisp(0.5),
                                IT2Tracks::crisp(0.3)};
    RepTensor t1 = {{{a, b, c}}};
    RepTensor t2 = {{{c, a, b}}};
    const CriteriaWeights ws2 = {ws[2], ws[0], ws[1]};
    const auto r1 = aggregate_all(t1, ws);
    const auto r2 = aggregate_all(t2, ws2);
    for (std::size_t i = 0; i < r1[0][0].size(); ++i) {
        CHECK(std::fabs(r1[0][0].upper[i] - r2[0][0].upper[i]) <= 1e-12);
        CHECK(std::fabs(r1[0][0].lower[i] - r2[0][0].lower[i]) <= 1e-12);
    }
}

TEST_CASE("mismatched shapes and dead weights are reported") {
    const Trapezoid t(0.1, 0.3, 0.5, 0.7, 1.0);
    CHECK_THROWS_WITH_AS(fwa({T1Track(t)}, {}), doctest::Contains("matching value and weight"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(fwa({T1Track(t)}, {T1Track(t)}, 1), doctest::Contains("at least 2"),
                         ValidationError);
    CHECK_THROWS_AS(fwa({T1Track(t)}, {T1Track(Trapezoid(0, 0, 0, 0, 1.0))}), NumericError);

    const auto& doc = shipped_doc();
    const Representation a = represent_response(CLE{CLE::Shape::Single, 2, 2}, doc.lts,
                                                doc.envelope);
    RepTensor bad = {{{a, a}, {a}}};
    CHECK_THROWS_WITH_AS(aggregate_all(bad, {IT2Tracks::crisp(0.5), IT2Tracks::crisp(0.5)}),
                         doctest::Contains("alternative 2"), ValidationError);
    CHECK_THROWS_WITH_AS(aggregate_all({}, {IT2Tracks::crisp(1.0)}),
                         doctest::Contains("no responses"), ValidationError);
}

}  // TEST_SUITE
