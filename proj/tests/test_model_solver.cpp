#include <doctest.h>

#include <cmath>

#include <specgap/model_solver.hpp>
#include <specgap/sampling.hpp>

using namespace specgap;

TEST_CASE("normal-form matrix entries") {
    SUBCASE("n=1: potential vanishes") {
        const ModelParams p{1, 7.0, 1.0};
        const Grid g = Grid::over(-0.5, 0.5, 3);
        CHECK(g.h == doctest::Approx(0.25));
        const SymTridiag T = build_normal_form_matrix(p, g);
        for (double d : T.diag) CHECK(d == doctest::Approx(2.0 / (g.h * g.h)).epsilon(1e-15));
        for (double e : T.off) CHECK(e == doctest::Approx(-1.0 / (g.h * g.h)).epsilon(1e-15));
    }
    SUBCASE("n=3, K=1: constant potential -1") {
        const ModelParams p{3, 1.0, 1.0};
        const Grid g = Grid::over(-0.5, 0.5, 11);
        const SymTridiag T = build_normal_form_matrix(p, g);
        for (double d : T.diag)
            CHECK(d == doctest::Approx(2.0 / (g.h * g.h) - 1.0).epsilon(1e-15));
    }
    SUBCASE("n=2, K=1, D near pi: endpoint node dominated by the potential") {
        const ModelParams p{2, 1.0, 3.14159};
        const Grid g = Grid::over(-p.D / 2, p.D / 2, 101);
        const SymTridiag T = build_normal_form_matrix(p, g);
        const double s_last = g.node(g.m - 1);
        CHECK(T.diag[g.m - 1] ==
              doctest::Approx(2.0 / (g.h * g.h) + potential(2, 1.0, s_last)).epsilon(1e-15));
        CHECK(potential(2, 1.0, s_last) < -100.0);
    }
}

TEST_CASE("shoot hits zero at closed-form eigenvalues") {
    const double tol = 1e-8;
    CHECK(std::abs(shoot({1, 0.0, 2.0}, M_PI * M_PI / 4.0, Parity::Even)) < tol);
    CHECK(std::abs(shoot({1, 0.0, 2.0}, M_PI * M_PI, Parity::Odd)) < tol);
    CHECK(std::abs(shoot({3, 1.0, 1.0}, M_PI * M_PI - 1.0, Parity::Even)) < tol);
    CHECK(std::abs(shoot({1, -3.0, 1.5}, 4.0 * M_PI * M_PI / 2.25, Parity::Odd)) < tol);
}

TEST_CASE("solve_model closed forms") {
    SUBCASE("flat interval") {
        const SolveReport rep = solve_model({1, 0.0, 2.0});
        CHECK(rep.pairs[0].lambda == doctest::Approx(M_PI * M_PI / 4).epsilon(1e-11));
        CHECK(rep.pairs[1].lambda == doctest::Approx(M_PI * M_PI).epsilon(1e-11));
    }
    SUBCASE("n=3, K=1: shifted flat spectrum, normalized gap exactly 3") {
        const ModelParams p{3, 1.0, 1.57};
        const SolveReport rep = solve_model(p);
        const double base = M_PI * M_PI / (1.57 * 1.57);
        CHECK(rep.pairs[0].lambda == doctest::Approx(base - 1).epsilon(1e-11));
        CHECK(rep.pairs[1].lambda == doctest::Approx(4 * base - 1).epsilon(1e-11));
        const double ng = p.D * p.D * (rep.pairs[1].lambda - rep.pairs[0].lambda) / (M_PI * M_PI);
        CHECK(std::abs(ng - 3.0) < 1e-8);
    }
    SUBCASE("published value for n=2, K=1, D=0.5 (reference-grid digits)") {
        const SolveReport rep = solve_model({2, 1.0, 0.5});
        const double ng = 0.25 * (rep.pairs[1].lambda - rep.pairs[0].lambda) / (M_PI * M_PI);
        CHECK(std::abs(ng - 2.9999262845) < 2e-4);
    }
}

TEST_CASE("eigenfunction sample invariants") {
    for (Method method : {Method::Both, Method::Tridiag, Method::Shooting}) {
        SolveOptions opt;
        opt.method = method;
        opt.grid_m = 800;
        const ModelParams p{4, 1.0, 1.2};
        const SolveReport rep = solve_model(p, opt);
        const Grid& g = rep.grid;
        const int m = g.m;
        const int c = (m - 1) / 2;

        // parity
        double parity = 0.0;
        for (int i = 0; i < m; ++i) {
            parity = std::max(parity,
                              std::abs(rep.pairs[0].samples[i] - rep.pairs[0].samples[m - 1 - i]));
            parity = std::max(parity,
                              std::abs(rep.pairs[1].samples[i] + rep.pairs[1].samples[m - 1 - i]));
        }
        CHECK(parity < 1e-8);

        // sign orientation and positivity
        CHECK(rep.pairs[0].samples[c] > 0);
        for (int i = c + 1; i < m - 1; ++i) CHECK(rep.pairs[1].samples[i] > 0);

        // unit weighted norm
        for (int k = 0; k < 2; ++k) {
            double acc = 0.0;
            for (int i = 0; i < m; ++i) {
                const double w = std::pow(cs(p.K, g.node(i)), p.n - 1);
                acc += rep.pairs[k].samples[i] * rep.pairs[k].samples[i] * w;
            }
            CHECK(acc * g.h == doctest::Approx(1.0).epsilon(1e-8));
        }

        // ordering
        CHECK(rep.pairs[0].lambda < rep.pairs[1].lambda);
    }
}

TEST_CASE("ODE defect decreases at second order") {
    SolveOptions a, b;
    a.method = b.method = Method::Tridiag;
    a.grid_m = 250;
    b.grid_m = 501;
    const ModelParams p{5, -1.0, 1.4};
    const double ra = solve_model(p, a).residual;
    const double rb = solve_model(p, b).residual;
    CHECK(ra / rb > 3.0);
    CHECK(ra / rb < 5.0);
}

TEST_CASE("closed-form lower bound for n >= 3 instances") {
    for (const ModelParams p : {ModelParams{3, 1.0, 1.0}, ModelParams{5, 1.0, 2.0},
                                ModelParams{4, -1.0, 1.0}}) {
        const SolveReport rep = solve_model(p);
        const double bound = std::max(M_PI * M_PI / (p.D * p.D) - (p.n - 1) * p.K / 2.0, 0.0);
        CHECK(rep.pairs[0].lambda >= bound - 1e-9);
    }
}

TEST_CASE("methods agree away from the singular diameter") {
    const ModelParams p{5, 1.0, 2.0};
    const SolveReport rep = solve_model(p);
    CHECK(rep.method_agreement <= 1e-7 * (1.0 + std::abs(rep.pairs[1].lambda)));
    CHECK_FALSE(rep.near_singular);
}

TEST_CASE("near-singular solves are flagged") {
    const SolveReport rep = solve_model({2, 1.0, 3.14});
    CHECK(rep.near_singular);
    CHECK(rep.pairs[0].lambda > 0);
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(solve_model({2, 1.0, 3.5}), PreconditionError);
    CHECK_THROWS_AS(solve_model({-1, 1.0, 1.0}), PreconditionError);
    CHECK_THROWS_AS(Grid::over(1.0, 0.0, 10), PreconditionError);
    CHECK_THROWS_AS(Grid::over(0.0, 1.0, 2), PreconditionError);
}
