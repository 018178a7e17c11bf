#include <doctest.h>

#include <cmath>

#include <specgap/curvature.hpp>

#include "oracles.hpp"

using namespace specgap;

TEST_CASE("sn/cs/tn closed forms") {
    CHECK(sn(1.0, M_PI / 2) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sn(0.0, 2.5) == 2.5);
    CHECK(sn(-1.0, 1.0) == doctest::Approx(1.1752011936438015).epsilon(1e-14));

    CHECK(cs(1.0, 0.0) == 1.0);
    CHECK(cs(1.0, M_PI / 3) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(cs(-1.0, 1.0) == doctest::Approx(1.5430806348152438).epsilon(1e-14));

    CHECK(tn(1.0, M_PI / 4) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(tn(0.0, 5.0) == 0.0);
    // sign convention: tn = K sn/cs, negative for K < 0 and s > 0
    CHECK(tn(-1.0, 1.0) == doctest::Approx(-0.7615941559557649).epsilon(1e-14));
}

TEST_CASE("tn domain guard") {
    CHECK_THROWS_AS(tn(1.0, M_PI / 2), DomainError);
    CHECK_THROWS_AS(tn(4.0, M_PI / 4 + 1e-13), DomainError);
    CHECK_NOTHROW(tn(1.0, M_PI / 2 - 1e-6));
    CHECK_NOTHROW(tn(-1.0, 50.0));
}

TEST_CASE("series branch is continuous near K = 0") {
    // straddle the series switch |K| s^2 = 1e-8
    const double s = 1.0;
    for (double K : {1e-9, -1e-9, 9e-9, 1.1e-8, 2e-8}) {
        CHECK(sn(K, s) == doctest::Approx(s * (1 - K * s * s / 6)).epsilon(1e-13));
        CHECK(cs(K, s) == doctest::Approx(1 - K * s * s / 2).epsilon(1e-13));
    }
}

TEST_CASE("l_fn values and oracle") {
    CHECK(l_fn(0.0, 1.0) == 0.0);
    CHECK(l_fn(1.0, M_PI / 4) == doctest::Approx(1.0 + M_PI / 2).epsilon(1e-14));
    // direct evaluation, frozen from -tanh(0.5) - 0.5/cosh^2(0.5)
    CHECK(l_fn(-1.0, 0.5) == doctest::Approx(-0.85534102374297346).epsilon(1e-14));
    // l has antiderivative s*tn(s); cross-check by numerical differentiation
    for (double K : {1.0, -1.0, 0.5}) {
        for (double s : {0.2, 0.5, 1.0}) {
            const double want =
                oracles::central_diff([K](double t) { return t * tn(K, t); }, s, 1e-6);
            CHECK(l_fn(K, s) == doctest::Approx(want).epsilon(1e-8));
        }
    }
    // sign pattern on (0, domain)
    CHECK(l_fn(1.0, 0.7) > 0);
    CHECK(l_fn(-1.0, 0.7) < 0);
}

TEST_CASE("m_fn closed form equals l'/2") {
    CHECK(m_fn(0.0, 3.0) == 0.0);
    CHECK(m_fn(1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    // frozen from the central difference of l_fn at s=1, step 1e-5
    CHECK(m_fn(-1.0, 1.0) == doctest::Approx(-0.10012433738941382).epsilon(1e-12));
    for (double K : {1.0, -1.0, 0.25}) {
        for (double s : {0.3, 0.8}) {
            const double want =
                0.5 * oracles::central_diff([K](double t) { return l_fn(K, t); }, s, 1e-5);
            CHECK(m_fn(K, s) == doctest::Approx(want).epsilon(1e-8));
        }
    }
}

TEST_CASE("a_of_k by finite-difference oracle and scaling") {
    // oracle: bisection on a central difference of m_fn over (0, 10)
    auto mprime = [](double s) {
        return oracles::central_diff([](double t) { return m_fn(-1.0, t); }, s, 1e-6);
    };
    const double a_oracle = oracles::bisect(mprime, 0.5, 10.0, 1e-10);
    const double a1 = a_of_k(-1.0);
    CHECK(a1 == doctest::Approx(a_oracle).epsilon(1e-8));
    CHECK(a1 == doctest::Approx(1.7179204967675553).epsilon(1e-10));
    CHECK(a_of_k(-4.0) == doctest::Approx(a1 / 2).epsilon(1e-10));
    CHECK(a_of_k(-0.25) == doctest::Approx(2 * a1).epsilon(1e-10));
    // m increasing on [0, a(K)]
    for (int i = 1; i < 20; ++i)
        CHECK(m_fn(-1.0, a1 * i / 20.0) > m_fn(-1.0, a1 * (i - 1) / 20.0));
    CHECK_THROWS_AS(a_of_k(1.0), PreconditionError);
}

TEST_CASE("potential special cases") {
    CHECK(potential(3, 1.0, 0.7) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(potential(1, 5.0, 0.2) == 0.0);
    CHECK(potential(2, 1.0, 0.0) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(potential(5, 0.0, 0.4) == 0.0);
}

TEST_CASE("kernel identities on scattered points") {
    double u = 0.37;
    for (int i = 0; i < 100; ++i) {
        u = std::fmod(u * 997.0 + 0.1234, 1.0);
        const double K = -2.0 + 4.0 * u;
        const double s = -1.2 + 2.4 * std::fmod(u * 31.0, 1.0);
        CHECK(cs(K, s) * cs(K, s) + K * sn(K, s) * sn(K, s) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("ModelParams validation") {
    CHECK_NOTHROW((ModelParams{2, 1.0, 3.14}).validate());
    CHECK_THROWS_AS((ModelParams{2, 1.0, 3.2}).validate(), PreconditionError);
    CHECK_THROWS_AS((ModelParams{0, 1.0, 1.0}).validate(), PreconditionError);
    CHECK_THROWS_AS((ModelParams{2, 1.0, -1.0}).validate(), PreconditionError);
    CHECK_NOTHROW((ModelParams{2, -1.0, 50.0}).validate());
}
