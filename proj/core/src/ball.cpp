#include <specgap/ball.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include <specgap/ode.hpp>

namespace specgap {

void BallSpec::validate() const {
    if (n < 2) throw PreconditionError("BallSpec: n must be >= 2");
    if (K != 0.0 && K != 1.0) throw PreconditionError("BallSpec: K must be 0 or 1");
    if (!(R > 0)) throw PreconditionError("BallSpec: R must be positive");
    if (K == 1.0 && R > M_PI / 2.0 + 1e-12)
        throw PreconditionError("BallSpec: K = 1 balls must satisfy R <= pi/2");
}

namespace {

struct RadialRhs {
    int n;
    double K;
    int ell;
    double lambda;
    void operator()(double s, const State2& y, State2& dy) const {
        const double sn_s = sn(K, s);
        const double cot = cs(K, s) / sn_s;
        const double ang = ell == 0 ? 0.0 : ell * (ell + n - 2) / (sn_s * sn_s);
        dy[0] = y[1];
        dy[1] = -(n - 1) * cot * y[1] - (lambda - ang) * y[0];
    }
};

State2 frobenius_start(int ell, double eps) {
    if (ell == 0) return {1.0, 0.0};
    if (ell == 1) return {eps, 1.0};
    return {eps * eps, 2.0 * eps};
}

}  // namespace

double radial_shoot(const BallSpec& spec, int ell, double lambda, double ode_tol) {
    spec.validate();
    if (ell < 0 || ell > 2) throw PreconditionError("radial_shoot: ell must be 0, 1 or 2");
    const double eps = 1e-6 * spec.R;
    OdeOptions opt;
    opt.rel_tol = ode_tol;
    opt.abs_tol = ode_tol * 1e-2;
    const RadialRhs f{spec.n, spec.K, ell, lambda};
    return integrate_dp54(f, eps, spec.R, frobenius_start(ell, eps), opt)[0];
}

namespace {

// k-th root (1-based) in lambda of the boundary value for angular index ell,
// located by an upward scan and refined by bisection.
double radial_root(const BallSpec& spec, int ell, int k, double tol) {
    const double step = 0.9 * std::pow(M_PI / (2.0 * spec.R), 2.0);
    double lo = 1e-6 * step;
    double flo = radial_shoot(spec, ell, lo);
    int found = 0;
    for (int i = 1; i <= 4000; ++i) {
        const double hi = lo + step;
        const double fhi = radial_shoot(spec, ell, hi);
        if (flo * fhi < 0.0) {
            ++found;
            if (found == k) {
                double a = lo, b = hi, fa = flo;
                for (int it = 0; it < 200 && (b - a) > tol * (1.0 + b); ++it) {
                    const double mid = 0.5 * (a + b);
                    const double fm = radial_shoot(spec, ell, mid);
                    if (fm == 0.0) return mid;
                    if (fa * fm < 0.0) {
                        b = mid;
                    } else {
                        a = mid;
                        fa = fm;
                    }
                }
                return 0.5 * (a + b);
            }
        }
        lo = hi;
        flo = fhi;
    }
    throw ConvergenceError("radial_root: no root " + std::to_string(k) + " for ell=" +
                           std::to_string(ell) + " within the scan range");
}

int count_interior_zeros(const BallSpec& spec, int ell, double lambda) {
    const double eps = 1e-6 * spec.R;
    OdeOptions opt;
    opt.rel_tol = 1e-10;
    opt.abs_tol = 1e-12;
    const RadialRhs f{spec.n, spec.K, ell, lambda};
    State2 y = frobenius_start(ell, eps);
    int zeros = 0;
    double prev = y[0];
    const int nodes = 2048;
    double s_prev = eps;
    for (int i = 1; i < nodes; ++i) {
        const double s = eps + (spec.R - eps) * i / nodes;
        y = integrate_dp54(f, s_prev, s, y, opt);
        s_prev = s;
        if (prev * y[0] < 0.0) ++zeros;
        if (y[0] != 0.0) prev = y[0];
    }
    return zeros;
}

}  // namespace

BallSpectrum ball_spectrum(const BallSpec& spec, double tol) {
    spec.validate();
    BallSpectrum out;
    out.spec = spec;
    out.lambda1 = radial_root(spec, 0, 1, tol);
    out.second_mode_ell0 = radial_root(spec, 0, 2, tol);
    out.first_mode_ell1 = radial_root(spec, 1, 1, tol);
    out.first_mode_ell2 = radial_root(spec, 2, 1, tol);
    if (out.first_mode_ell1 <= out.second_mode_ell0) {
        out.lambda2 = out.first_mode_ell1;
        out.mode2_ell = 1;
        out.mode2_radial_index = 1;
    } else {
        out.lambda2 = out.second_mode_ell0;
        out.mode2_ell = 0;
        out.mode2_radial_index = 2;
    }
    if (!(out.lambda1 < out.lambda2))
        throw ConvergenceError("ball_spectrum: lambda1 >= lambda2");
    // Sturm oscillation sanity on the refined modes.
    if (count_interior_zeros(spec, 0, out.lambda1) != 0)
        throw PropertyViolation("ball_spectrum: first radial mode has interior zeros");
    if (count_interior_zeros(spec, 0, out.second_mode_ell0) != 1)
        throw PropertyViolation("ball_spectrum: second radial mode does not have exactly one zero");

    // Dense profile of the first eigenfunction.
    const double eps = 1e-6 * spec.R;
    OdeOptions opt;
    opt.rel_tol = 1e-12;
    opt.abs_tol = 1e-14;
    const RadialRhs f{spec.n, spec.K, 0, out.lambda1};
    State2 y{1.0, 0.0};
    const int nodes = 1024;
    double s_prev = eps;
    for (int i = 1; i < nodes; ++i) {
        const double s = eps + (spec.R - eps) * i / nodes;
        y = integrate_dp54(f, s_prev, s, y, opt);
        s_prev = s;
        out.s.push_back(s);
        out.u.push_back(y[0]);
        out.du.push_back(y[1]);
    }
    return out;
}

GapComparison gap_comparison_check(const BallSpec& spec, const SolveOptions& model_opt) {
    spec.validate();
    if (spec.K == 1.0 && spec.diameter() > M_PI / 2.0 + 1e-12)
        throw PreconditionError(
            "gap_comparison_check: K = 1 requires ball diameter 2R <= pi/2");
    GapComparison out;
    out.ball = ball_spectrum(spec);
    const ModelParams p{spec.n, spec.K, spec.diameter()};
    const SolveReport model = solve_model(p, model_opt);
    out.model_lambda1 = model.pairs[0].lambda;
    out.model_lambda2 = model.pairs[1].lambda;
    out.gap_margin =
        (out.ball.lambda2 - out.ball.lambda1) - (out.model_lambda2 - out.model_lambda1);
    out.domain_margin = out.ball.lambda1 - out.model_lambda1;
    out.sharp_l1_margin = out.ball.lambda1 - spec.n * out.model_lambda1;
    out.sharp_l2_applies = spec.n >= 3;
    const double pi2_d2 = M_PI * M_PI / (p.D * p.D);
    out.sharp_l2_margin = out.ball.lambda2 - (spec.n * out.model_lambda1 + 3.0 * pi2_d2);
    out.all_hold = out.gap_margin > 0 && out.domain_margin > 0 && out.sharp_l1_margin > 0 &&
                   (!out.sharp_l2_applies || out.sharp_l2_margin > 0);
    return out;
}

BallHessian ball_hessian_check(const BallSpec& spec, const SolveOptions& model_opt) {
    spec.validate();
    if (spec.K != 1.0)
        throw PreconditionError("ball_hessian_check: stated for K = 1 balls");
    if (spec.diameter() > M_PI / 2.0 + 1e-12)
        throw PreconditionError("ball_hessian_check: requires 2R <= pi/2");
    const BallSpectrum b = ball_spectrum(spec);
    const ModelParams p{spec.n, spec.K, spec.diameter()};
    const SolveReport model = solve_model(p, model_opt);

    BallHessian out;
    out.bound = -model.pairs[0].lambda;
    out.origin_value = -b.lambda1 / spec.n;
    out.max_radial = -1e300;
    out.max_tangential = -1e300;
    for (std::size_t i = 0; i < b.s.size(); ++i) {
        const double s = b.s[i], u = b.u[i], du = b.du[i];
        if (!(u > 0.0)) break;  // past the Dirichlet end of the profile
        const double sn_s = sn(spec.K, s);
        const double cot = cs(spec.K, s) / sn_s;
        // u'' from the radial equation itself (only u is under test here).
        const double ddu = -(spec.n - 1) * cot * du - b.lambda1 * u;
        const double fr = du / u;
        out.max_radial = std::max(out.max_radial, ddu / u - fr * fr);
        out.max_tangential = std::max(out.max_tangential, fr * cot);
    }
    out.tolerance = 1e-7 * (1.0 + std::abs(out.bound));
    out.ok = out.max_radial <= out.bound + out.tolerance &&
             out.max_tangential <= out.bound + out.tolerance;
    return out;
}

}  // namespace specgap
