#include <specgap/gap_analysis.hpp>

#include <algorithm>
#include <cmath>

#include <specgap/sampling.hpp>

namespace specgap {

GapReport gap_report(const ModelParams& p, const SolveOptions& opt) {
    GapReport r;
    r.params = p;
    r.solve = solve_model(p, opt);
    r.lambda1 = r.solve.pairs[0].lambda;
    r.lambda2 = r.solve.pairs[1].lambda;
    r.gap = r.lambda2 - r.lambda1;
    r.normalized_gap = p.D * p.D * r.gap / (M_PI * M_PI);
    return r;
}

std::string to_string(SweepAxis a) { return a == SweepAxis::D ? "D" : "n"; }

std::string to_string(Monotonicity m) {
    switch (m) {
        case Monotonicity::Increasing: return "increasing";
        case Monotonicity::Decreasing: return "decreasing";
        case Monotonicity::Flat: return "flat";
        case Monotonicity::NonMonotone: return "non-monotone";
    }
    return "?";
}

SweepResult sweep(SweepAxis axis, const std::vector<double>& values, const ModelParams& base,
                  const SolveOptions& opt, double flat_tol) {
    if (values.size() < 2) throw PreconditionError("sweep: need at least two values");
    for (std::size_t i = 1; i < values.size(); ++i)
        if (!(values[i] > values[i - 1]))
            throw PreconditionError("sweep: values must be strictly increasing");

    SweepResult out;
    out.axis = axis;
    out.values = values;
    for (double v : values) {
        ModelParams p = base;
        if (axis == SweepAxis::D) {
            p.D = v;
        } else {
            if (std::abs(v - std::round(v)) > 1e-12 || v < 1)
                throw PreconditionError("sweep: n values must be integers >= 1");
            p.n = static_cast<int>(std::round(v));
        }
        out.reports.push_back(gap_report(p, opt));
    }

    bool any_up = false, any_down = false;
    for (std::size_t i = 1; i < out.reports.size(); ++i) {
        const double d = out.reports[i].normalized_gap - out.reports[i - 1].normalized_gap;
        if (d > flat_tol) any_up = true;
        else if (d < -flat_tol) any_down = true;
    }
    if (any_up && any_down) out.verdict = Monotonicity::NonMonotone;
    else if (any_up) out.verdict = Monotonicity::Increasing;
    else if (any_down) out.verdict = Monotonicity::Decreasing;
    else out.verdict = Monotonicity::Flat;
    return out;
}

namespace {

// phi' at every interior node: fourth-order centered stencils.  The Dirichlet
// zeros serve as the neighbors at index -1 and m; the outermost nodes use a
// skewed five-point formula that stays inside [boundary, interior].
std::vector<double> derivative_samples(const Grid& g, const std::vector<double>& phi) {
    const int m = g.m;
    auto at = [&](int i) -> double { return (i == -1 || i == m) ? 0.0 : phi[i]; };
    std::vector<double> d(m);
    for (int i = 0; i < m; ++i) {
        if (i >= 2 && i + 2 < m) {
            d[i] = stencil::d1(phi, i, 1, g.h);
        } else if (i == 0) {
            d[i] = (-3.0 * at(-1) - 10.0 * phi[0] + 18.0 * phi[1] - 6.0 * phi[2] + phi[3]) /
                   (12.0 * g.h);
        } else if (i == m - 1) {
            d[i] = (3.0 * at(m) + 10.0 * phi[m - 1] - 18.0 * phi[m - 2] + 6.0 * phi[m - 3] -
                    phi[m - 4]) /
                   (12.0 * g.h);
        } else {
            d[i] = (at(i - 2) - 8.0 * at(i - 1) + 8.0 * at(i + 1) - at(i + 2)) / (12.0 * g.h);
        }
    }
    return d;
}

// Trapezoid of `f` over [0, D/2] given values at all interior nodes plus the
// implicit zero at the right endpoint; g.m is odd so s = 0 is a node.
double half_interval_trapezoid(const Grid& g, const std::vector<double>& f) {
    const int c = (g.m - 1) / 2;
    double s = 0.5 * f[c];
    for (int i = c + 1; i < g.m; ++i) s += f[i];
    return s * g.h;
}

}  // namespace

double perturbation_derivative(const SolveReport& rep, int index) {
    const EigenPair& e = rep.pair(index);
    const ModelParams& p = rep.params;
    const Grid& g = e.grid;
    const std::vector<double> dphi = derivative_samples(g, e.samples);
    std::vector<double> f(g.m);
    for (int i = 0; i < g.m; ++i) {
        const double s = g.node(i);
        const double w = std::pow(cs(p.K, s), p.n - 1);
        f[i] = l_fn(p.K, s) * e.samples[i] * dphi[i] * w;
    }
    return 2.0 * (p.n - 1) * half_interval_trapezoid(g, f);
}

double perturbation_derivative_by_parts(const SolveReport& rep, int index) {
    const EigenPair& e = rep.pair(index);
    const ModelParams& p = rep.params;
    const Grid& g = e.grid;
    std::vector<double> f(g.m);
    for (int i = 0; i < g.m; ++i) {
        const double s = g.node(i);
        const double w = std::pow(cs(p.K, s), p.n - 1);
        f[i] = e.samples[i] * e.samples[i] * ((p.n - 3) * m_fn(p.K, s) - (p.n - 1) * p.K) * w;
    }
    return (p.n - 1) * half_interval_trapezoid(g, f);
}

double gap_derivative_integral(const SolveReport& rep) {
    const ModelParams& p = rep.params;
    const Grid& g = rep.pairs[0].grid;
    std::vector<double> f(g.m);
    for (int i = 0; i < g.m; ++i) {
        const double s = g.node(i);
        const double w = std::pow(cs(p.K, s), p.n - 1);
        const double p1 = rep.pairs[0].samples[i];
        const double p2 = rep.pairs[1].samples[i];
        f[i] = m_fn(p.K, s) * (p2 * p2 - p1 * p1) * w;
    }
    return (p.n - 1) * (p.n - 3) * half_interval_trapezoid(g, f);
}

double crossing_point(const SolveReport& rep) {
    const ModelParams& p = rep.params;
    const Grid& g = rep.pairs[0].grid;
    const int c = (g.m - 1) / 2;
    const std::vector<double>& phi1 = rep.pairs[0].samples;
    const std::vector<double>& phi2 = rep.pairs[1].samples;

    // Rescale phi2 to the same half-interval weighted norm as phi1 (they are
    // already equal by parity of the full-interval normalization; this keeps
    // the comparison exact under asymmetric numerical noise).
    std::vector<double> q1(g.m), q2(g.m);
    for (int i = 0; i < g.m; ++i) {
        const double w = std::pow(cs(p.K, g.node(i)), p.n - 1);
        q1[i] = phi1[i] * phi1[i] * w;
        q2[i] = phi2[i] * phi2[i] * w;
    }
    const double scale = std::sqrt(half_interval_trapezoid(g, q1) / half_interval_trapezoid(g, q2));

    double max_abs = 0.0;
    for (int i = c; i < g.m; ++i) max_abs = std::max(max_abs, std::abs(phi1[i]));
    const double zero_tol = 1e-12 * max_abs;

    int crossings = 0;
    double b = 0.0;
    int prev_sign = 0;
    for (int i = c; i < g.m; ++i) {
        const double gval = scale * phi2[i] - phi1[i];
        const int sign = (gval > zero_tol) ? 1 : (gval < -zero_tol ? -1 : 0);
        if (sign != 0) {
            if (prev_sign != 0 && sign != prev_sign) {
                ++crossings;
                const double g_prev = scale * phi2[i - 1] - phi1[i - 1];
                b = g.node(i - 1) + g.h * g_prev / (g_prev - gval);
            }
            prev_sign = sign;
        }
    }
    if (crossings != 1)
        throw PropertyViolation("crossing_point: found " + std::to_string(crossings) +
                                " sign changes of phi2 - phi1 on (0, D/2); expected exactly 1");
    return b;
}

RatioCheck ratio_monotonicity_check(const ModelParams& p, double dD, const SolveOptions& opt) {
    if (p.n < 3) throw PreconditionError("ratio_monotonicity_check: requires n >= 3");
    if (!(dD > 0)) throw PreconditionError("ratio_monotonicity_check: requires dD > 0");
    if (p.K > 0 && !(p.D + dD < M_PI / std::sqrt(p.K)))
        throw PreconditionError("ratio_monotonicity_check: D + dD must stay below pi/sqrt(K)");
    if (p.K < 0) {
        const double a = a_of_k(p.K);
        if (!(p.D + dD <= a))
            throw PreconditionError("ratio_monotonicity_check: D + dD must stay within (0, a(K)]");
    }
    ModelParams q = p;
    q.D = p.D + dD;
    const GapReport r0 = gap_report(p, opt);
    const GapReport r1 = gap_report(q, opt);
    RatioCheck out;
    out.ratio_at_D = r0.lambda2 / r0.lambda1;
    out.ratio_at_D_plus = r1.lambda2 / r1.lambda1;
    out.non_decreasing = out.ratio_at_D_plus >= out.ratio_at_D - 1e-9 * (1.0 + out.ratio_at_D);
    return out;
}

}  // namespace specgap
