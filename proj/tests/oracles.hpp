// Test-side oracles, independent of the library's computation paths.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracles {

// Dense symmetric eigenvalues by cyclic Jacobi rotations (row-major square
// matrix).  Independent of any Sturm-sequence machinery.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

// Bisection root finder for a continuous function with a certified bracket.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double tol = 1e-14) {
    double flo = f(lo);
    if (flo * f(hi) > 0) throw std::runtime_error("oracle bisect: no sign change");
    while (hi - lo > tol * (1.0 + std::abs(hi))) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0)
            hi = mid;
        else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

// k-th positive zero of the Bessel function J_nu via the standard library's
// cyl_bessel_j and a scanning bisection.
inline double bessel_zero(double nu, int k) {
    const double step = 0.1;
    double x = nu + 0.5;
    double prev = std::cyl_bessel_j(nu, x);
    int found = 0;
    for (int i = 0; i < 100000; ++i) {
        const double xn = x + step;
        const double cur = std::cyl_bessel_j(nu, xn);
        if (prev * cur < 0) {
            ++found;
            if (found == k)
                return bisect([nu](double t) { return std::cyl_bessel_j(nu, t); }, x, xn, 1e-15);
        }
        x = xn;
        prev = cur;
    }
    throw std::runtime_error("oracle bessel_zero: zero not found");
}

// Central finite difference with step h.
inline double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracles
