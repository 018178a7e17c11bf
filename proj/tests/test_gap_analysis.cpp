#include <doctest.h>

#include <cmath>

#include <specgap/gap_analysis.hpp>

#include "oracles.hpp"

using namespace specgap;

namespace {

// Oracle: (1/D) d/dD (D^2 lambda_i) as a central difference of c^2 lambda_i(cD)
// at c = 1, step 1e-4.
double perturbation_oracle(const ModelParams& p, int index, double step = 1e-4) {
    auto lam = [&](double c) {
        ModelParams q = p;
        q.D = c * p.D;
        const SolveReport rep = solve_model(q);
        return c * c * rep.pair(index).lambda;
    };
    return (lam(1.0 + step) - lam(1.0 - step)) / (2.0 * step);
}

}  // namespace

TEST_CASE("gap_report basics and published cells") {
    SUBCASE("n=1, K=-1: potential-free, normalized gap exactly 3") {
        const GapReport g = gap_report({1, -1.0, 1.0});
        CHECK(g.normalized_gap == doctest::Approx(3.0).epsilon(1e-9));
    }
    SUBCASE("published n-table cell n=9") {
        const GapReport g = gap_report({9, 1.0, 1.57});
        CHECK(std::abs(g.normalized_gap - 3.34632483) < 2e-4);
    }
    SUBCASE("published D-table cell n=4, D=3.14159 (singular regime)") {
        const GapReport g = gap_report({4, 1.0, 3.14159});
        CHECK(std::abs(g.normalized_gap - 3.9999546561) < 5e-4);
    }
}

TEST_CASE("sweep verdicts per dimension") {
    std::vector<double> D;
    for (int i = 0; i < 7; ++i) D.push_back(0.4 + 0.4 * i);
    SolveOptions so;
    so.method = Method::Tridiag;
    CHECK(sweep(SweepAxis::D, D, {2, 1.0, 1.0}, so).verdict == Monotonicity::Decreasing);
    CHECK(sweep(SweepAxis::D, D, {4, 1.0, 1.0}, so).verdict == Monotonicity::Increasing);
    CHECK(sweep(SweepAxis::D, D, {3, 1.0, 1.0}, so).verdict == Monotonicity::Flat);
    CHECK(sweep(SweepAxis::N, {2, 3, 4, 5}, {2, 1.0, 1.57}, so).verdict ==
          Monotonicity::Increasing);
    CHECK_THROWS_AS(sweep(SweepAxis::D, {1.0, 0.5}, {2, 1.0, 1.0}, so), PreconditionError);
    CHECK_THROWS_AS(sweep(SweepAxis::N, {2.5, 3.0}, {2, 1.0, 1.0}, so), PreconditionError);
}

TEST_CASE("perturbation derivative against the rescaling oracle") {
    SUBCASE("K=0 vanishes identically") {
        const SolveReport rep = solve_model({4, 0.0, 1.3});
        CHECK(std::abs(perturbation_derivative(rep, 1)) < 1e-9);
        CHECK(std::abs(perturbation_derivative(rep, 2)) < 1e-9);
    }
    SUBCASE("n=2, K=1, D=1, i=1") {
        const SolveReport rep = solve_model({2, 1.0, 1.0});
        const double got = perturbation_derivative(rep, 1);
        const double want = perturbation_oracle({2, 1.0, 1.0}, 1);
        CHECK(got == doctest::Approx(want).epsilon(1e-5));
        CHECK(got < 0);
    }
    SUBCASE("n=5, K=-1, D=1, i=2") {
        const SolveReport rep = solve_model({5, -1.0, 1.0});
        const double got = perturbation_derivative(rep, 2);
        const double want = perturbation_oracle({5, -1.0, 1.0}, 2);
        CHECK(got == doctest::Approx(want).epsilon(1e-4));
        CHECK(got > 0);
    }
}

TEST_CASE("integration-by-parts form agrees") {
    for (const ModelParams p : {ModelParams{2, 1.0, 1.0}, ModelParams{5, 1.0, 1.0},
                                ModelParams{4, -1.0, 1.2}}) {
        const SolveReport rep = solve_model(p);
        for (int i : {1, 2}) {
            const double a = perturbation_derivative(rep, i);
            const double b = perturbation_derivative_by_parts(rep, i);
            CHECK(a == doctest::Approx(b).epsilon(1e-4));
        }
    }
}

TEST_CASE("gap derivative integral signs and consistency") {
    SUBCASE("n=3 vanishes by the (n-3) factor") {
        const SolveReport rep = solve_model({3, 1.0, 1.3});
        CHECK(std::abs(gap_derivative_integral(rep)) < 1e-9);
    }
    SUBCASE("n=2, K=1 negative") {
        const SolveReport rep = solve_model({2, 1.0, 1.0});
        CHECK(gap_derivative_integral(rep) < 0);
    }
    SUBCASE("n=5, K=1 positive and equals the difference of the perturbation derivatives") {
        const SolveReport rep = solve_model({5, 1.0, 1.0});
        const double direct = gap_derivative_integral(rep);
        const double diff = perturbation_derivative(rep, 2) - perturbation_derivative(rep, 1);
        CHECK(direct > 0);
        CHECK(direct == doctest::Approx(diff).epsilon(1e-4));
    }
}

TEST_CASE("crossing point") {
    SUBCASE("flat closed form: cos(pi s/2) meets sin(pi s) at exactly 1/3") {
        const SolveReport rep = solve_model({1, 0.0, 2.0});
        CHECK(crossing_point(rep) == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
    }
    SUBCASE("curved instances: unique crossing with the expected sign pattern") {
        for (const ModelParams p : {ModelParams{2, 1.0, 1.0}, ModelParams{4, -1.0, 0.8}}) {
            const SolveReport rep = solve_model(p);
            const double b = crossing_point(rep);
            CHECK(b > 0);
            CHECK(b < p.D / 2);
            // scan oracle: phi2^2 - phi1^2 <= 0 before b, >= 0 after
            const Grid& g = rep.grid;
            const int c = (g.m - 1) / 2;
            double mx = 0.0;
            for (double v : rep.pairs[0].samples) mx = std::max(mx, std::abs(v));
            for (int i = c; i < g.m; ++i) {
                const double d2 = rep.pairs[1].samples[i] * rep.pairs[1].samples[i] -
                                  rep.pairs[0].samples[i] * rep.pairs[0].samples[i];
                if (g.node(i) < b - g.h) CHECK(d2 <= 1e-10 * mx);
                if (g.node(i) > b + g.h) CHECK(d2 >= -1e-10 * mx);
            }
        }
    }
}

TEST_CASE("ratio monotonicity") {
    SUBCASE("n=3 closed form increases") {
        const RatioCheck rc = ratio_monotonicity_check({3, 1.0, 1.0}, 0.1);
        const double want_lo = (4 * M_PI * M_PI - 1) / (M_PI * M_PI - 1);
        CHECK(rc.ratio_at_D == doctest::Approx(want_lo).epsilon(1e-9));
        CHECK(rc.non_decreasing);
        CHECK(rc.ratio_at_D_plus > rc.ratio_at_D);
    }
    SUBCASE("n=5, K=1") {
        CHECK(ratio_monotonicity_check({5, 1.0, 1.0}, 0.05).non_decreasing);
    }
    SUBCASE("n=4, K=-1 inside (0, a(K)]") {
        CHECK(ratio_monotonicity_check({4, -1.0, 0.5}, 0.05).non_decreasing);
        CHECK_THROWS_AS(ratio_monotonicity_check({4, -1.0, 1.7}, 0.1), PreconditionError);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(ratio_monotonicity_check({2, 1.0, 1.0}, 0.1), PreconditionError);
        CHECK_THROWS_AS(ratio_monotonicity_check({3, 1.0, 3.0}, 0.2), PreconditionError);
    }
}

TEST_CASE("normalized gap tends to 3 as D -> 0") {
    for (const ModelParams p : {ModelParams{2, 1.0, 0.01}, ModelParams{6, -1.0, 0.01}}) {
        SolveOptions so;
        so.method = Method::Tridiag;
        const GapReport g = gap_report(p, so);
        CHECK(std::abs(g.normalized_gap - 3.0) <= 1e-3);
    }
}
