#include <specgap/modulus.hpp>

#include <algorithm>
#include <cmath>

#include <specgap/sampling.hpp>

namespace specgap {

namespace {

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// Differencing stride for third derivatives: roundoff in a d3 stencil grows
// like eps/H^3, so the effective spacing is widened to ~D/400.
int wide_stride(const Grid& g) {
    const double span = g.b - g.a;
    return std::max(1, static_cast<int>(std::lround(span / 400.0 / g.h)));
}

}  // namespace

LogDerivativeProfile log_derivative_profile(const SolveReport& rep) {
    const EigenPair& e = rep.pair(1);
    LogDerivativeProfile prof;
    prof.params = rep.params;
    prof.lambda1 = e.lambda;
    prof.lambda1_grid = e.lambda_grid;
    prof.grid = e.grid;
    prof.phi = e.samples;
    const int m = prof.grid.m;
    for (int i = 2; i + 2 < m; ++i) {
        if (!(prof.phi[i] > 0.0))
            throw ConvergenceError("log_derivative_profile: non-positive phi_1 sample at node " +
                                   std::to_string(i) + " (solver defect)");
        prof.idx.push_back(i);
        prof.f.push_back(stencil::d1(prof.phi, i, 1, prof.grid.h) / prof.phi[i]);
    }
    return prof;
}

double riccati_residual(const LogDerivativeProfile& prof) {
    const ModelParams& p = prof.params;
    const Grid& g = prof.grid;
    const double floor = 0.02 * max_abs(prof.phi);
    double worst = 0.0;
    for (std::size_t k = 0; k < prof.idx.size(); ++k) {
        const int i = prof.idx[k];
        if (prof.phi[i] < floor) continue;
        const double f = prof.f[k];
        const double fp = stencil::d2(prof.phi, i, 1, g.h) / prof.phi[i] - f * f;
        const double r =
            fp - (p.n - 1) * tn(p.K, g.node(i)) * f + prof.lambda1_grid + f * f;
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

double second_order_residual(const LogDerivativeProfile& prof) {
    const ModelParams& p = prof.params;
    const Grid& g = prof.grid;
    const int t = wide_stride(g);
    const double floor = 0.15 * max_abs(prof.phi);
    const int c = (g.m - 1) / 2;
    double worst = 0.0;
    for (int i = c; i + 3 * t < g.m; i += t) {
        if (i - 3 * t < 0 || prof.phi[i] < floor) continue;
        const double f = stencil::d1(prof.phi, i, 1, g.h) / prof.phi[i];
        const double fp = stencil::d2(prof.phi, i, 1, g.h) / prof.phi[i] - f * f;
        const double fpp =
            stencil::d3(prof.phi, i, t, g.h) / prof.phi[i] - 3.0 * f * fp - f * f * f;
        const double s = g.node(i);
        const double tns = tn(p.K, s);
        const double r = fpp + 2.0 * f * fp -
                         tns * ((p.n + 1) * fp + 2.0 * prof.lambda1_grid + 2.0 * f * f) -
                         (p.n - 1) * (p.K - tns * tns) * f;
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

RatioProfile ratio_profile(const SolveReport& rep) {
    RatioProfile prof;
    prof.params = rep.params;
    prof.lambda1 = rep.pairs[0].lambda_grid;
    prof.lambda2 = rep.pairs[1].lambda_grid;
    prof.grid = rep.pairs[0].grid;
    prof.phi1 = rep.pairs[0].samples;
    prof.phi2 = rep.pairs[1].samples;
    const Grid& g = prof.grid;
    const int c = (g.m - 1) / 2;
    const double floor = 0.02 * max_abs(prof.phi1);
    for (int i = c; i < g.m - 2; ++i) {
        if (prof.phi1[i] < floor) break;
        prof.idx.push_back(i);
        prof.w.push_back(prof.phi2[i] / prof.phi1[i]);
    }
    const int m = g.m;
    const double d1_top =
        stencil::d1_from_boundary(prof.phi2[m - 1], prof.phi2[m - 2], prof.phi2[m - 3], g.h);
    const double d1_bot =
        stencil::d1_from_boundary(prof.phi1[m - 1], prof.phi1[m - 2], prof.phi1[m - 3], g.h);
    prof.w_end = d1_top / d1_bot;
    return prof;
}

double w_equation_residual(const RatioProfile& prof) {
    const ModelParams& p = prof.params;
    const Grid& g = prof.grid;
    const int t = wide_stride(g);
    const double floor = 0.15 * max_abs(prof.phi1);
    const int c = (g.m - 1) / 2;
    const double gap = prof.lambda2 - prof.lambda1;
    double worst = 0.0;
    for (int i = c; i + 2 * t < g.m; i += t) {
        if (i - 2 * t < 0 || prof.phi1[i] < floor) continue;
        // w and f evaluated pointwise; w-derivatives by stride stencils on
        // pointwise w values, which are smooth wherever phi_1 is not small.
        std::vector<double> wloc(5);
        for (int k = -2; k <= 2; ++k) wloc[k + 2] = prof.phi2[i + k * t] / prof.phi1[i + k * t];
        const double H = t * g.h;
        const double wp = (wloc[0] - 8.0 * wloc[1] + 8.0 * wloc[3] - wloc[4]) / (12.0 * H);
        const double wpp =
            (-wloc[0] + 16.0 * wloc[1] - 30.0 * wloc[2] + 16.0 * wloc[3] - wloc[4]) /
            (12.0 * H * H);
        const double f = stencil::d1(prof.phi1, i, 1, g.h) / prof.phi1[i];
        const double r = wpp - (p.n - 1) * tn(p.K, g.node(i)) * wp + 2.0 * f * wp +
                         gap * wloc[2];
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

PsiVerdict psi_inequalities(const ModelParams& p, double Dprime, const SolveOptions& opt,
                            bool exploratory) {
    p.validate();
    if (!exploratory) {
        if (p.K < 0)
            throw PreconditionError(
                "psi_inequalities: K < 0 is outside the verified hypotheses (use exploratory "
                "mode to inspect margins)");
        if (p.K > 0 && !(p.D <= M_PI / (2.0 * std::sqrt(p.K)) + 1e-12))
            throw PreconditionError("psi_inequalities: requires D <= pi/(2 sqrt K)");
    }
    if (Dprime == 0.0) {
        if (p.K > 0) {
            const double limit = M_PI / (2.0 * std::sqrt(p.K));
            Dprime = std::min(1.05 * p.D, 0.5 * (p.D + std::min(limit, 1.10 * p.D)));
            Dprime = std::min(Dprime, limit);
        } else {
            Dprime = 1.05 * p.D;
        }
    }
    if (!(Dprime >= p.D))
        throw PreconditionError("psi_inequalities: D' must be >= D");

    ModelParams pp = p;
    pp.D = Dprime;
    const SolveReport rep_D = solve_model(p, opt);
    const SolveReport rep_Dp = (Dprime == p.D) ? rep_D : solve_model(pp, opt);

    PsiVerdict v;
    v.Dprime = Dprime;
    v.lambda1_D = rep_D.pairs[0].lambda;
    v.lambda1_Dprime = rep_Dp.pairs[0].lambda;
    v.n2_bound_margin = v.lambda1_D - 3.5 * p.K;

    const EigenPair& e = rep_Dp.pairs[0];
    const Grid& g = e.grid;
    const std::vector<double>& phi = e.samples;
    const int t = wide_stride(g);
    const double floor = 0.15 * max_abs(phi);
    const int c = (g.m - 1) / 2;

    double scale = std::abs(v.lambda1_D);
    double worst_e = -1e300, worst_s = -1e300;
    for (int i = c; i + 3 * t < g.m; i += t) {
        const double s = g.node(i);
        if (s > p.D / 2.0 + 1e-15) break;
        if (i - 3 * t < 0 || phi[i] < floor) continue;
        const double psi = stencil::d1(phi, i, 1, g.h) / phi[i];
        const double psip = stencil::d2(phi, i, 1, g.h) / phi[i] - psi * psi;
        const double psipp =
            stencil::d3(phi, i, t, g.h) / phi[i] - 3.0 * psi * psip - psi * psi * psi;
        const double tns = tn(p.K, s);
        const double elliptic =
            psipp + 2.0 * psi * psip -
            tns * ((p.n + 1) * psip + 2.0 * psi * psi + 2.0 * v.lambda1_D) -
            (p.n - 1) * (p.K - tns * tns) * psi;
        const double slope = 2.0 * psip - 4.0 * tns * psi - (p.n - 1) * (p.K - tns * tns);
        worst_e = std::max(worst_e, elliptic);
        worst_s = std::max(worst_s, slope);
        scale = std::max({scale, std::abs(psip), psi * psi});
    }
    v.elliptic_margin = worst_e;
    v.slope_margin = worst_s;
    v.tolerance = 1e-7 * (1.0 + scale);
    v.elliptic_ok = worst_e <= v.tolerance;
    v.slope_ok = worst_s <= v.tolerance;
    return v;
}

double hessian_limit_check(const SolveReport& rep) {
    const EigenPair& e = rep.pair(1);
    const Grid& g = e.grid;
    const int c = (g.m - 1) / 2;
    const auto f_at = [&](int i) { return stencil::d1(e.samples, i, 1, g.h) / e.samples[i]; };
    return (f_at(c + 1) - f_at(c - 1)) / (2.0 * g.h);
}

LowerBounds lower_bound_suite(const ModelParams& p, const SolveOptions& opt) {
    p.validate();
    const SolveReport rep = solve_model(p, opt);
    LowerBounds lb;
    lb.lambda1 = rep.pairs[0].lambda;
    const double pi2_d2 = M_PI * M_PI / (p.D * p.D);
    lb.closed_form_bound = std::max(pi2_d2 - (p.n - 1) * p.K / 2.0, 0.0);
    lb.closed_form_margin = lb.lambda1 - lb.closed_form_bound;
    // The (n-1)K/2 constant bounds the potential from below only when the
    // (n-3)/cs^2 term is nonnegative, so the derivation covers n = 1 and
    // n >= 3; at n = 2 the margin is reported but carries no guarantee.
    lb.closed_form_applies = (p.n != 2);
    const double v0 = potential(p.n, p.K, 0.0);
    const double vend = potential(p.n, p.K, p.D / 2.0);
    lb.variational_bound = std::max(pi2_d2 + std::min(v0, vend), 0.0);
    lb.variational_margin = lb.lambda1 - lb.variational_bound;
    lb.n_lambda1 = p.n * lb.lambda1;
    lb.n_lambda1_plus_gap = p.n * lb.lambda1 + 3.0 * pi2_d2;
    return lb;
}

}  // namespace specgap
