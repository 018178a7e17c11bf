#include <doctest.h>

#include <cmath>

#include <specgap/ball.hpp>
#include <specgap/ode.hpp>

#include "oracles.hpp"

using namespace specgap;

TEST_CASE("radial boundary values at known eigenvalues") {
    // hemisphere: u = cos(s) solves the ell=0 problem at lambda = n
    CHECK(std::abs(radial_shoot({2, 1.0, M_PI / 2}, 0, 2.0)) < 1e-9);
    CHECK(std::abs(radial_shoot({3, 1.0, M_PI / 2}, 0, 3.0)) < 1e-9);
    // unit disk: Bessel zeros j_{0,1}, j_{1,1} (oracle below re-derives them)
    CHECK(std::abs(radial_shoot({2, 0.0, 1.0}, 0, 5.7831859629)) < 1e-7);
    CHECK(std::abs(radial_shoot({2, 0.0, 1.0}, 1, 14.6819706422)) < 1e-7);
    CHECK_THROWS_AS(radial_shoot({2, 1.0, 1.0}, 3, 1.0), PreconditionError);
}

TEST_CASE("Bessel-zero oracle pins the frozen disk eigenvalues") {
    const double j01 = oracles::bessel_zero(0.0, 1);
    const double j11 = oracles::bessel_zero(1.0, 1);
    CHECK(j01 * j01 == doctest::Approx(5.7831859629467845).epsilon(1e-12));
    CHECK(j11 * j11 == doctest::Approx(14.681970642123893).epsilon(1e-12));
}

TEST_CASE("hemisphere spectra are k(k+n-1)") {
    for (int n : {2, 3, 4}) {
        const BallSpectrum b = ball_spectrum({n, 1.0, M_PI / 2});
        CHECK(b.lambda1 == doctest::Approx(n).epsilon(1e-9));
        CHECK(b.lambda2 == doctest::Approx(2.0 * (n + 1)).epsilon(1e-9));
        CHECK(b.mode2_ell == 1);  // degree-2 odd harmonics carry ell = 1
    }
}

TEST_CASE("unit disk spectrum against the Bessel oracle") {
    const BallSpectrum b = ball_spectrum({2, 0.0, 1.0});
    const double j01 = oracles::bessel_zero(0.0, 1);
    const double j11 = oracles::bessel_zero(1.0, 1);
    CHECK(b.lambda1 == doctest::Approx(j01 * j01).epsilon(1e-9));
    CHECK(b.lambda2 == doctest::Approx(j11 * j11).epsilon(1e-9));
    CHECK(b.mode2_ell == 1);
    CHECK(b.mode2_radial_index == 1);
}

TEST_CASE("Euclidean scaling lambda(cR) = lambda(R)/c^2") {
    const double c = 1.7;
    const BallSpectrum a = ball_spectrum({3, 0.0, 1.0});
    const BallSpectrum b = ball_spectrum({3, 0.0, c});
    CHECK(b.lambda1 == doctest::Approx(a.lambda1 / (c * c)).epsilon(1e-8));
    CHECK(b.lambda2 == doctest::Approx(a.lambda2 / (c * c)).epsilon(1e-8));
}

TEST_CASE("Frobenius offset insensitivity") {
    // re-derive lambda_1 of the unit disk with a test-side integrator started
    // at eps/2 instead of eps; the eigenvalue must not move at 1e-9
    const BallSpec spec{2, 0.0, 1.0};
    const double lam_lib = ball_spectrum(spec).lambda1;
    auto boundary_value = [&](double lam, double eps) {
        auto f = [&](double s, const State2& y, State2& dy) {
            dy[0] = y[1];
            dy[1] = -(spec.n - 1) / s * y[1] - lam * y[0];
        };
        OdeOptions opt;
        opt.rel_tol = 1e-12;
        opt.abs_tol = 1e-14;
        return integrate_dp54(f, eps, spec.R, State2{1.0, 0.0}, opt)[0];
    };
    for (double eps : {1e-6, 5e-7}) {
        const double lam = oracles::bisect(
            [&](double l) { return boundary_value(l, eps); }, lam_lib - 0.1, lam_lib + 0.1, 1e-12);
        CHECK(lam == doctest::Approx(lam_lib).epsilon(1e-9));
    }
}

TEST_CASE("mode ordering: ell=1 first mode below ell=0 second mode") {
    for (const BallSpec spec : {BallSpec{2, 1.0, 0.7}, BallSpec{3, 0.0, 1.0}}) {
        const BallSpectrum b = ball_spectrum(spec);
        CHECK(b.first_mode_ell1 < b.second_mode_ell0);
        CHECK(b.first_mode_ell1 < b.first_mode_ell2);
    }
}

TEST_CASE("gap comparison against the model at the ball diameter") {
    for (const BallSpec spec : {BallSpec{3, 1.0, M_PI / 8}, BallSpec{2, 0.0, 0.5},
                                BallSpec{4, 1.0, 0.7}}) {
        const GapComparison gc = gap_comparison_check(spec);
        CHECK(gc.gap_margin > 0);
        CHECK(gc.domain_margin > 0);
        CHECK(gc.sharp_l1_margin > 0);
        if (gc.sharp_l2_applies) CHECK(gc.sharp_l2_margin > 0);
        CHECK(gc.all_hold);
    }
    CHECK_THROWS_AS(gap_comparison_check({2, 1.0, 1.2}), PreconditionError);
}

TEST_CASE("hessian bound on the radial first eigenfunction") {
    for (const BallSpec spec : {BallSpec{2, 1.0, M_PI / 4}, BallSpec{3, 1.0, M_PI / 4}}) {
        const BallHessian bh = ball_hessian_check(spec);
        CHECK(bh.ok);
        // the s -> 0 limit is u''(0)/u(0) = -lambda_1/n <= -model lambda_1
        CHECK(bh.origin_value <= bh.bound + bh.tolerance);
        CHECK(bh.max_radial <= bh.bound + bh.tolerance);
        CHECK(bh.max_tangential <= bh.bound + bh.tolerance);
    }
    CHECK_THROWS_AS(ball_hessian_check({2, 0.0, 1.0}), PreconditionError);
}

TEST_CASE("ball spec validation") {
    CHECK_THROWS_AS((BallSpec{2, 0.5, 1.0}).validate(), PreconditionError);
    CHECK_THROWS_AS((BallSpec{2, 1.0, 2.0}).validate(), PreconditionError);
    CHECK_THROWS_AS((BallSpec{1, 1.0, 0.5}).validate(), PreconditionError);
    CHECK_NOTHROW((BallSpec{2, 1.0, M_PI / 2}).validate());
}
