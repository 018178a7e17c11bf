#include <specgap/tridiag.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace specgap {

int sturm_count(const SymTridiag& T, double x) {
    const int m = T.size();
    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    int count = 0;
    double q = 1.0;
    for (int i = 0; i < m; ++i) {
        const double off2 = (i == 0) ? 0.0 : T.off[i - 1] * T.off[i - 1];
        q = T.diag[i] - x - off2 / q;
        if (q == 0.0) q = -tiny;
        if (q < 0.0) ++count;
    }
    return count;
}

namespace {

struct Bounds {
    double lo, hi;
};

Bounds gershgorin(const SymTridiag& T) {
    const int m = T.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i < m; ++i) {
        const double r = (i > 0 ? std::abs(T.off[i - 1]) : 0.0) +
                         (i + 1 < m ? std::abs(T.off[i]) : 0.0);
        lo = std::min(lo, T.diag[i] - r);
        hi = std::max(hi, T.diag[i] + r);
    }
    return {lo, hi};
}

// Bisect for the j-th (1-based) eigenvalue using the pivot count.
double bisect_eigenvalue(const SymTridiag& T, int j, Bounds b) {
    double lo = b.lo, hi = b.hi;
    const double scale = std::max(std::abs(lo), std::abs(hi)) + 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (sturm_count(T, mid) >= j)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= 8.0 * std::numeric_limits<double>::epsilon() * scale) break;
    }
    // Certify simplicity: widen by a hair so the bracket straddles the root.
    const double pad = 64.0 * std::numeric_limits<double>::epsilon() * scale;
    const int below = sturm_count(T, lo - pad);
    const int above = sturm_count(T, hi + pad);
    if (above - below != 1)
        throw ConvergenceError("eig_tridiag: bracket for eigenvalue " + std::to_string(j) +
                               " holds " + std::to_string(above - below) +
                               " eigenvalues (multiple or failed bisection)");
    return 0.5 * (lo + hi);
}

// Solve (T - shift I) x = b by LU with partial pivoting (overwrites b).
// du2 holds second-superdiagonal fill-in.
void tridiag_solve_shifted(const SymTridiag& T, double shift, std::vector<double>& b) {
    const int m = T.size();
    std::vector<double> dl(m, 0.0), d(m), du(m, 0.0), du2(m, 0.0);
    std::vector<int> piv(m, 0);
    for (int i = 0; i < m; ++i) d[i] = T.diag[i] - shift;
    for (int i = 0; i + 1 < m; ++i) {
        dl[i] = T.off[i];
        du[i] = T.off[i];
    }
    const double tiny = std::numeric_limits<double>::min() * 4.0;
    // factorization
    for (int i = 0; i + 1 < m; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            if (std::abs(d[i]) < tiny) d[i] = (d[i] < 0 ? -tiny : tiny);
            const double mult = dl[i] / d[i];
            d[i + 1] -= mult * du[i];
            dl[i] = mult;  // store multiplier
            piv[i] = 0;
        } else {
            const double mult = d[i] / dl[i];
            d[i] = dl[i];
            const double tmp = d[i + 1];
            d[i + 1] = du[i] - mult * tmp;
            if (i + 2 < m) {
                du2[i] = du[i + 1];
                du[i + 1] = -mult * du2[i];
            }
            du[i] = tmp;
            dl[i] = mult;
            piv[i] = 1;
        }
    }
    if (std::abs(d[m - 1]) < tiny) d[m - 1] = (d[m - 1] < 0 ? -tiny : tiny);
    // forward
    for (int i = 0; i + 1 < m; ++i) {
        if (piv[i] == 0) {
            b[i + 1] -= dl[i] * b[i];
        } else {
            std::swap(b[i], b[i + 1]);
            b[i + 1] -= dl[i] * b[i];
        }
    }
    // back substitution
    b[m - 1] /= d[m - 1];
    if (m > 1) b[m - 2] = (b[m - 2] - du[m - 2] * b[m - 1]) / d[m - 2];
    for (int i = m - 3; i >= 0; --i)
        b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
}

double nrm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

void axpy(double a, const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double eigen_residual(const SymTridiag& T, double lambda, const std::vector<double>& x) {
    const int m = T.size();
    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
        double r = (T.diag[i] - lambda) * x[i];
        if (i > 0) r += T.off[i - 1] * x[i - 1];
        if (i + 1 < m) r += T.off[i] * x[i + 1];
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

}  // namespace

std::vector<double> eig_tridiag_smallest_values(const SymTridiag& T, int k) {
    if (k < 1 || k > T.size())
        throw PreconditionError("eig_tridiag: need 1 <= k <= m");
    const Bounds b = gershgorin(T);
    std::vector<double> out;
    out.reserve(k);
    for (int j = 1; j <= k; ++j) out.push_back(bisect_eigenvalue(T, j, b));
    return out;
}

std::vector<TridiagPair> eig_tridiag_smallest(const SymTridiag& T, int k) {
    const std::vector<double> values = eig_tridiag_smallest_values(T, k);
    const int m = T.size();
    double norm_t = 0.0;
    for (int i = 0; i < m; ++i)
        norm_t = std::max(norm_t, std::abs(T.diag[i]) + (i > 0 ? std::abs(T.off[i - 1]) : 0.0) +
                                      (i + 1 < m ? std::abs(T.off[i]) : 0.0));
    std::vector<TridiagPair> out;
    for (int j = 0; j < k; ++j) {
        TridiagPair p;
        p.value = values[j];
        // deterministic start with no accidental symmetry
        std::vector<double> x(m);
        for (int i = 0; i < m; ++i) x[i] = 1.0 + 0.25 * std::sin(1.0 + 2.61803398875 * i);
        std::vector<double> best;
        double best_res = std::numeric_limits<double>::infinity();
        for (int sweep = 0; sweep < 10; ++sweep) {
            tridiag_solve_shifted(T, p.value, x);
            if (j == 1) {
                const double c = dot(x, out[0].vector);
                axpy(-c, out[0].vector, x);
            }
            const double nx = nrm2(x);
            for (double& v : x) v /= nx;
            const double res = eigen_residual(T, p.value, x);
            if (res < best_res) {
                best_res = res;
                best = x;
            }
            if (res <= 8.0 * std::numeric_limits<double>::epsilon() * norm_t) break;
        }
        if (best_res > 1e-10 * norm_t)
            throw ConvergenceError("eig_tridiag: inverse iteration stalled at eigenvalue " +
                                   std::to_string(j + 1) + ", residual " +
                                   std::to_string(best_res));
        p.vector = std::move(best);
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace specgap
