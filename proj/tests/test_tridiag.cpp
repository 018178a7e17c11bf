#include <doctest.h>

#include <cmath>

#include <specgap/model_solver.hpp>
#include <specgap/tridiag.hpp>

#include "oracles.hpp"

using namespace specgap;

namespace {

SymTridiag free_laplacian(int m, double D) {
    Grid g = Grid::over(-D / 2, D / 2, m);
    SymTridiag T;
    T.diag.assign(m, 2.0 / (g.h * g.h));
    T.off.assign(m - 1, -1.0 / (g.h * g.h));
    return T;
}

}  // namespace

TEST_CASE("discrete free Laplacian, m=3: closed-form eigenvalues") {
    const double D = 1.0;
    const SymTridiag T = free_laplacian(3, D);
    const double h = D / 4.0;
    const auto v = eig_tridiag_smallest_values(T, 3);
    for (int j = 1; j <= 3; ++j) {
        const double want = 2.0 * (1.0 - std::cos(j * M_PI / 4.0)) / (h * h);
        CHECK(v[j - 1] == doctest::Approx(want).epsilon(1e-13));
    }
}

TEST_CASE("free Laplacian converges to pi^2, 4 pi^2") {
    const double D = 1.0;
    double prev_err = 1e300;
    for (int m : {200, 400, 800}) {
        const auto v = eig_tridiag_smallest_values(free_laplacian(m, D), 2);
        const double err = std::abs(v[0] - M_PI * M_PI) + std::abs(v[1] - 4 * M_PI * M_PI);
        CHECK(err < prev_err);
        prev_err = err;
    }
    CHECK(prev_err < 1e-3);
}

TEST_CASE("random symmetric tridiagonal 8x8 against dense Jacobi oracle") {
    const int m = 8;
    SymTridiag T;
    double u = 0.17;
    for (int i = 0; i < m; ++i) {
        u = std::fmod(u * 997.0 + 0.3141, 1.0);
        T.diag.push_back(-2.0 + 4.0 * u);
    }
    for (int i = 0; i + 1 < m; ++i) {
        u = std::fmod(u * 997.0 + 0.3141, 1.0);
        T.off.push_back(-1.5 + 3.0 * u);
    }
    std::vector<std::vector<double>> dense(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i) dense[i][i] = T.diag[i];
    for (int i = 0; i + 1 < m; ++i) dense[i][i + 1] = dense[i + 1][i] = T.off[i];
    const auto want = oracles::jacobi_eigenvalues(dense);
    const auto got = eig_tridiag_smallest_values(T, m);
    for (int i = 0; i < m; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-10));
}

TEST_CASE("sturm_count counts eigenvalues below a shift") {
    const SymTridiag T = free_laplacian(50, 1.0);
    const auto v = eig_tridiag_smallest_values(T, 4);
    CHECK(sturm_count(T, v[0] - 1.0) == 0);
    CHECK(sturm_count(T, 0.5 * (v[0] + v[1])) == 1);
    CHECK(sturm_count(T, 0.5 * (v[2] + v[3])) == 3);
}

TEST_CASE("multiple eigenvalue fails bracket certification") {
    SymTridiag T;
    T.diag = {1.0, 1.0, 1.0};
    T.off = {0.0, 0.0};
    CHECK_THROWS_AS(eig_tridiag_smallest_values(T, 1), ConvergenceError);
}

TEST_CASE("inverse-iteration eigenvectors have small residuals and are orthogonal") {
    const ModelParams p{4, 1.0, 1.5};
    const Grid g = Grid::over(-p.D / 2, p.D / 2, 501);
    const SymTridiag T = build_normal_form_matrix(p, g);
    const auto pairs = eig_tridiag_smallest(T, 2);
    double norm_t = 0.0;
    for (int i = 0; i < T.size(); ++i) norm_t = std::max(norm_t, std::abs(T.diag[i]));
    for (const auto& pr : pairs) {
        double worst = 0.0;
        for (int i = 0; i < T.size(); ++i) {
            double r = (T.diag[i] - pr.value) * pr.vector[i];
            if (i > 0) r += T.off[i - 1] * pr.vector[i - 1];
            if (i + 1 < T.size()) r += T.off[i] * pr.vector[i + 1];
            worst = std::max(worst, std::abs(r));
        }
        CHECK(worst <= 1e-11 * norm_t);
    }
    double dot = 0.0;
    for (int i = 0; i < T.size(); ++i) dot += pairs[0].vector[i] * pairs[1].vector[i];
    CHECK(std::abs(dot) < 1e-12);
}
