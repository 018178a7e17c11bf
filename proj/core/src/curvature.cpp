#include <specgap/curvature.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace specgap {

namespace {

constexpr double kSeriesCut = 1e-8;  // switch to series when |K| s^2 below this

bool use_series(double K, double s) { return std::abs(K) * s * s < kSeriesCut; }

}  // namespace

double sn(double K, double s) {
    if (!std::isfinite(K) || !std::isfinite(s))
        throw DomainError("sn: non-finite argument");
    if (use_series(K, s)) {
        const double z = K * s * s;
        return s * (1.0 + z * (-1.0 / 6 + z * (1.0 / 120 - z / 5040)));
    }
    if (K > 0) {
        const double r = std::sqrt(K);
        return std::sin(r * s) / r;
    }
    const double r = std::sqrt(-K);
    return std::sinh(r * s) / r;
}

double cs(double K, double s) {
    if (!std::isfinite(K) || !std::isfinite(s))
        throw DomainError("cs: non-finite argument");
    if (use_series(K, s)) {
        const double z = K * s * s;
        return 1.0 + z * (-0.5 + z * (1.0 / 24 - z / 720));
    }
    if (K > 0) return std::cos(std::sqrt(K) * s);
    return std::cosh(std::sqrt(-K) * s);
}

double tn_domain_limit(double K) {
    if (K <= 0) return std::numeric_limits<double>::infinity();
    return M_PI / (2.0 * std::sqrt(K)) - 1e-12;
}

namespace {

void check_tn_domain(double K, double s, const char* who) {
    if (K > 0 && std::abs(s) >= tn_domain_limit(K))
        throw DomainError(std::string(who) + ": |s| at or beyond the cs zero (K=" +
                          std::to_string(K) + ", s=" + std::to_string(s) + ")");
}

}  // namespace

double tn(double K, double s) {
    check_tn_domain(K, s, "tn");
    if (K == 0) return 0.0;
    return K * sn(K, s) / cs(K, s);
}

double l_fn(double K, double s) {
    check_tn_domain(K, s, "l_fn");
    if (K == 0) return 0.0;
    const double c = cs(K, s);
    return tn(K, s) + s * K / (c * c);
}

double m_fn(double K, double s) {
    check_tn_domain(K, s, "m_fn");
    if (K == 0) return 0.0;
    const double c = cs(K, s);
    return K / (c * c) * (1.0 + s * tn(K, s));
}

double a_of_k(double K) {
    if (!(K < 0)) throw PreconditionError("a_of_k: requires K < 0");
    // m'(s) = K cs^{-2} (3 tn + 3 s tn^2 + s K); the bracketed factor g is
    // negative near 0 and eventually positive, with a single sign change.
    const auto g = [K](double s) {
        const double t = tn(K, s);
        return 3.0 * t + 3.0 * s * t * t + s * K;
    };
    const double scale = 1.0 / std::sqrt(-K);
    double lo = 0.25 * scale, hi = scale;
    int tries = 0;
    while (g(hi) <= 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++tries > 60)
            throw ConvergenceError("a_of_k: failed to bracket the zero of m' (implementation bug)");
    }
    if (g(lo) >= 0.0) lo = 1e-8 * scale;
    if (!(g(lo) < 0.0 && g(hi) > 0.0))
        throw ConvergenceError("a_of_k: bracket does not certify a sign change (implementation bug)");
    for (int it = 0; it < 200 && (hi - lo) > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double potential(int n, double K, double s) {
    check_tn_domain(K, s, "potential");
    if (n == 1 || K == 0) return 0.0;
    const double c = cs(K, s);
    return (n - 1) * K / 4.0 * ((n - 3) / (c * c) - (n - 1));
}

void ModelParams::validate() const {
    if (n < 1) throw PreconditionError("ModelParams: n must be >= 1");
    if (!(D > 0) || !std::isfinite(D)) throw PreconditionError("ModelParams: D must be positive and finite");
    if (!std::isfinite(K)) throw PreconditionError("ModelParams: K must be finite");
    if (K > 0 && !(D < M_PI / std::sqrt(K)))
        throw PreconditionError("ModelParams: need D < pi/sqrt(K) when K > 0");
}

}  // namespace specgap
