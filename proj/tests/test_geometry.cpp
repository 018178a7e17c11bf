#include <doctest.h>

#include <cmath>

#include <specgap/geometry.hpp>

using namespace specgap;

namespace {

VariationProbe sphere_probe(double d0, int idx = 1) {
    const ModelPoint x = make_point(1.0, {1, 0, 0, 0});
    const ModelPoint y = make_point(1.0, {std::cos(d0), std::sin(d0), 0, 0});
    return make_probe(x, y, idx);
}

VariationProbe hyper_probe(double d0, int idx = 1) {
    const ModelPoint x = make_point(-1.0, {0, 0, 0, 1});
    const ModelPoint y = make_point(-1.0, {std::sinh(d0), 0, 0, std::cosh(d0)});
    return make_probe(x, y, idx);
}

}  // namespace

TEST_CASE("exp_map closed forms") {
    SUBCASE("quarter turn on S^2") {
        const ModelPoint x = make_point(1.0, {1, 0, 0});
        const ModelPoint y = exp_map(x, {0, 1, 0}, M_PI / 2);
        CHECK(y.x[0] == doctest::Approx(0.0).epsilon(1e-15));
        CHECK(y.x[1] == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("r = 0 is the identity") {
        const ModelPoint x = make_point(1.0, {0, 0.6, 0.8});
        const ModelPoint y = exp_map(x, {0, -0.8, 0.6}, 0.0);
        for (int i = 0; i < 3; ++i) CHECK(y.x[i] == doctest::Approx(x.x[i]).epsilon(1e-15));
    }
    SUBCASE("hyperboloid geodesic") {
        const ModelPoint x = make_point(-1.0, {0, 0, 1});
        const ModelPoint y = exp_map(x, {1, 0, 0}, 1.0);
        CHECK(y.x[0] == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
        CHECK(y.x[2] == doctest::Approx(std::cosh(1.0)).epsilon(1e-14));
    }
    SUBCASE("non-unit directions rejected") {
        const ModelPoint x = make_point(1.0, {1, 0, 0});
        CHECK_THROWS_AS(exp_map(x, {0, 2, 0}, 1.0), PreconditionError);
        CHECK_THROWS_AS(exp_map(x, {0.5, std::sqrt(0.75), 0}, 1.0), PreconditionError);
    }
}

TEST_CASE("distance closed forms and guards") {
    const ModelPoint a = make_point(1.0, {1, 0, 0});
    const ModelPoint b = make_point(1.0, {0, 1, 0});
    CHECK(distance(a, b) == doctest::Approx(M_PI / 2).epsilon(1e-14));
    CHECK(distance(a, a) == 0.0);
    const ModelPoint h0 = make_point(-1.0, {0, 0, 1});
    const ModelPoint h1 = make_point(-1.0, {std::sinh(1.0), 0, std::cosh(1.0)});
    CHECK(distance(h0, h1) == doctest::Approx(1.0).epsilon(1e-13));

    SUBCASE("drift off the quadric is rejected") {
        ModelPoint bad = a;
        bad.x[0] = 1.0 + 1e-6;
        CHECK_THROWS_AS(distance(bad, b), DomainError);
        CHECK_THROWS_AS(make_point(1.0, {1.1, 0, 0}), DomainError);
        CHECK_THROWS_AS(make_point(-1.0, {0, 0, -1}), DomainError);
    }
    SUBCASE("antipodal pair rejected") {
        const ModelPoint c = make_point(1.0, {-1, 0, 0});
        CHECK_THROWS_AS(distance(a, c), DomainError);
    }
}

TEST_CASE("exp/distance roundtrip within the injectivity range") {
    double worst = 0.0;
    for (double r : {0.1, 0.7, 1.9, 2.8}) {
        const ModelPoint x = make_point(1.0, {1, 0, 0, 0});
        const ModelPoint y = exp_map(x, {0, 0, 1, 0}, r);
        worst = std::max(worst, std::abs(distance(x, y) - r));
        const ModelPoint hx = make_point(-1.0, {0, 0, 0, 1});
        const ModelPoint hy = exp_map(hx, {0, 1, 0, 0}, r);
        worst = std::max(worst, std::abs(distance(hx, hy) - r));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("variation family") {
    SUBCASE("eta(0, s) traces the base geodesic") {
        const VariationProbe pr = sphere_probe(1.0);
        for (double s : {-0.5, -0.2, 0.0, 0.3, 0.5}) {
            const auto a = variation_eta(pr, 0.0, s);
            const ModelPoint g = exp_map(pr.x0, pr.e_n, s + pr.d0 / 2);
            for (std::size_t i = 0; i < a.size(); ++i)
                CHECK(a[i] == doctest::Approx(g.x[i]).epsilon(1e-13));
        }
    }
    SUBCASE("endpoints anchored to the endpoint geodesics") {
        for (const VariationProbe& pr : {sphere_probe(1.0), hyper_probe(1.0)}) {
            for (double r : {-0.2, 0.1, 0.2}) {
                const auto lhs = variation_eta(pr, r, -pr.d0 / 2);
                const auto want = probe_endpoint_x(pr, r);
                for (std::size_t i = 0; i < lhs.size(); ++i)
                    CHECK(lhs[i] == doctest::Approx(want[i]).epsilon(1e-12));
                const auto rhs = variation_eta(pr, r, pr.d0 / 2);
                const auto wanty = probe_endpoint_y(pr, r);
                for (std::size_t i = 0; i < rhs.size(); ++i)
                    CHECK(rhs[i] == doctest::Approx(wanty[i]).epsilon(1e-12));
            }
        }
    }
    SUBCASE("points stay on the model") {
        const VariationProbe pr = sphere_probe(1.0);
        const auto p = variation_eta(pr, 0.05, 0.2);
        CHECK(std::abs(model_dot(1.0, p, p) - 1.0) < 1e-12);
    }
}

TEST_CASE("d_r expansion coefficient equals -tn(d0/2)") {
    SUBCASE("closed-form targets") {
        CHECK(dr_expansion_check(sphere_probe(1.0)) ==
              doctest::Approx(-0.54630248984379051).epsilon(1e-5));
        CHECK(dr_expansion_check(hyper_probe(1.0)) ==
              doctest::Approx(0.46211715726000976).epsilon(1e-5));
    }
    SUBCASE("small-d0 limit is -d0 K/2") {
        CHECK(dr_expansion_check(sphere_probe(0.01)) == doctest::Approx(-0.005).epsilon(1e-4));
    }
    SUBCASE("matrix of curvatures and separations") {
        for (double d0 : {0.3, 1.0, 2.0}) {
            CHECK(dr_expansion_check(sphere_probe(d0)) ==
                  doctest::Approx(-tn(1.0, d0 / 2)).epsilon(1e-5));
            CHECK(dr_expansion_check(hyper_probe(d0)) ==
                  doctest::Approx(-tn(-1.0, d0 / 2)).epsilon(1e-5));
        }
    }
    SUBCASE("first variation vanishes") {
        const VariationProbe pr = sphere_probe(1.0);
        const double h = 1e-3;
        CHECK(std::abs(probe_dr(pr, h) - probe_dr(pr, -h)) / (2 * h) < 1e-5);
    }
}

TEST_CASE("second derivative of the geodesic field in r") {
    SUBCASE("sphere, d0=1: coefficient -2 tan(1/2) - tan^2(1/2)") {
        const SecondDerivReport rep = second_derivative_in_r_check(sphere_probe(1.0));
        CHECK(rep.target == doctest::Approx(-1.3910513900971059).epsilon(1e-12));
        CHECK(std::abs(rep.en_coeff_start - rep.target) < 1e-4);
        CHECK(std::abs(rep.en_coeff_end - rep.target) < 1e-4);
        CHECK(rep.max_normal_component < 1e-4);
    }
    SUBCASE("hyperbolic, d0=1: coefficient 2 tanh(1/2) - tanh^2(1/2)") {
        const SecondDerivReport rep = second_derivative_in_r_check(hyper_probe(1.0));
        CHECK(rep.target == doctest::Approx(0.71068204748594693).epsilon(1e-12));
        CHECK(std::abs(rep.en_coeff_end - rep.target) < 1e-4);
        CHECK(rep.max_normal_component < 1e-4);
    }
    SUBCASE("normal components vanish at d0=0.5") {
        const SecondDerivReport rep = second_derivative_in_r_check(sphere_probe(0.5));
        CHECK(rep.max_normal_component < 1e-4);
    }
}

TEST_CASE("probe frame is orthonormal and parallel") {
    for (const VariationProbe& pr : {sphere_probe(1.2), hyper_probe(1.2)}) {
        CHECK(pr.normals.size() == 2);  // ambient dim 4 -> n=3 -> two normals
        for (const auto& e : pr.normals) {
            CHECK(model_dot(pr.K, e, e) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(std::abs(model_dot(pr.K, e, pr.e_n)) < 1e-12);
            for (double s : {0.0, 0.4, 1.0}) {
                const ModelPoint g = exp_map(pr.x0, pr.e_n, s);
                CHECK(std::abs(model_dot(pr.K, e, g.x)) < 1e-12);
            }
        }
    }
    CHECK_THROWS_AS(sphere_probe(1.0, 5), PreconditionError);
}
