#include <specgap/model_solver.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include <specgap/ode.hpp>
#include <specgap/sampling.hpp>

namespace specgap {

Grid Grid::over(double a, double b, int m) {
    if (!(a < b)) throw PreconditionError("Grid: need a < b");
    if (m < 3) throw PreconditionError("Grid: need m >= 3");
    Grid g;
    g.a = a;
    g.b = b;
    g.m = m;
    g.h = (b - a) / (m + 1);
    return g;
}

std::vector<double> Grid::nodes() const {
    std::vector<double> out(m);
    for (int i = 0; i < m; ++i) out[i] = node(i);
    return out;
}

std::string to_string(Method m) {
    switch (m) {
        case Method::Tridiag: return "tridiag";
        case Method::Shooting: return "shooting";
        case Method::Both: return "both";
    }
    return "?";
}

SymTridiag build_normal_form_matrix(const ModelParams& p, const Grid& g) {
    p.validate();
    SymTridiag T;
    T.diag.resize(g.m);
    T.off.assign(g.m - 1, -1.0 / (g.h * g.h));
    const double inv_h2 = 1.0 / (g.h * g.h);
    for (int i = 0; i < g.m; ++i) T.diag[i] = 2.0 * inv_h2 + potential(p.n, p.K, g.node(i));
    return T;
}

double shoot(const ModelParams& p, double lambda, Parity parity, double ode_tol) {
    p.validate();
    const int n = p.n;
    const double K = p.K;
    auto f = [n, K, lambda](double s, const State2& y, State2& dy) {
        dy[0] = y[1];
        dy[1] = (n - 1) * tn(K, s) * y[1] - lambda * y[0];
    };
    OdeOptions opt;
    opt.rel_tol = ode_tol;
    opt.abs_tol = ode_tol * 1e-2;
    const State2 y0 = (parity == Parity::Even) ? State2{1.0, 0.0} : State2{0.0, 1.0};
    return integrate_dp54(f, 0.0, p.D / 2.0, y0, opt)[0];
}

namespace {

struct TridiagLevel {
    Grid grid;
    std::vector<double> values;           // k smallest
    std::vector<TridiagPair> pairs;       // optionally with vectors
};

// Effective coarse grid: refine when a K>0 boundary layer of width
// x_b = (pi/sqrt(K) - D)/2 would otherwise be unresolved.
int effective_grid_m(const ModelParams& p, int requested_m) {
    if (p.K <= 0) return requested_m;
    const double x_b = (M_PI / std::sqrt(p.K) - p.D) / 2.0;
    if (x_b <= 0) return requested_m;
    const double want = 48.0 * p.D / x_b;
    const double m = std::max(static_cast<double>(requested_m), want);
    return static_cast<int>(std::min(m, 65536.0));
}

std::vector<double> phi_bar_from_normal_form(const ModelParams& p, const Grid& g,
                                             const std::vector<double>& v) {
    std::vector<double> phi(v.size());
    const double ex = -(p.n - 1) / 2.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        phi[i] = std::pow(cs(p.K, g.node(i)), ex) * v[i];
    return phi;
}

void orient_and_normalize(const ModelParams& p, const Grid& g, std::vector<double>& phi) {
    const int c = (g.m - 1) / 2;  // center node; g.m is odd for sample grids
    if (phi[c + 1] < 0)
        for (double& v : phi) v = -v;
    double norm2 = 0.0;
    for (int i = 0; i < g.m; ++i) {
        const double w = std::pow(cs(p.K, g.node(i)), p.n - 1);
        norm2 += phi[i] * phi[i] * w;
    }
    norm2 *= g.h;
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& v : phi) v *= inv;
}

// Max defect of the model equation at interior nodes via 3-point stencils,
// with the Dirichlet zeros supplying the boundary neighbors.
double ode_defect(const ModelParams& p, const Grid& g, const std::vector<double>& phi,
                  double lambda) {
    double worst = 0.0;
    double scale = 0.0;
    for (int i = 0; i < g.m; ++i) scale = std::max(scale, std::abs(phi[i]));
    for (int i = 0; i < g.m; ++i) {
        const double lo = (i == 0) ? 0.0 : phi[i - 1];
        const double hi = (i == g.m - 1) ? 0.0 : phi[i + 1];
        const double d2 = (lo - 2.0 * phi[i] + hi) / (g.h * g.h);
        const double d1 = (hi - lo) / (2.0 * g.h);
        const double r = d2 - (p.n - 1) * tn(p.K, g.node(i)) * d1 + lambda * phi[i];
        worst = std::max(worst, std::abs(r));
    }
    return worst / std::max(scale, 1e-300);
}

// Eigenfunction samples by integrating outward from s = 0 at a converged
// lambda, mirrored by parity onto the negative half.
std::vector<double> shooting_samples(const ModelParams& p, const Grid& g, double lambda,
                                     Parity parity, double ode_tol) {
    const int c = (g.m - 1) / 2;
    std::vector<double> phi(g.m, 0.0);
    auto f = [&p, lambda](double s, const State2& y, State2& dy) {
        dy[0] = y[1];
        dy[1] = (p.n - 1) * tn(p.K, s) * y[1] - lambda * y[0];
    };
    OdeOptions opt;
    opt.rel_tol = ode_tol;
    opt.abs_tol = ode_tol * 1e-2;
    State2 y = (parity == Parity::Even) ? State2{1.0, 0.0} : State2{0.0, 1.0};
    phi[c] = y[0];
    double s_prev = 0.0;
    for (int i = c + 1; i < g.m; ++i) {
        y = integrate_dp54(f, s_prev, g.node(i), y, opt);
        s_prev = g.node(i);
        phi[i] = y[0];
    }
    const double sign = (parity == Parity::Even) ? 1.0 : -1.0;
    for (int i = 0; i < c; ++i) phi[i] = sign * phi[g.m - 1 - i];
    return phi;
}

// First sign-change root of lambda -> shoot(...) near a seed estimate.
double refine_shoot_root(const ModelParams& p, Parity parity, double seed, double tol,
                         double ode_tol) {
    const double scale = M_PI * M_PI / (p.D * p.D);
    auto B = [&](double lam) { return shoot(p, lam, parity, ode_tol); };
    double w = std::max(0.1 * std::abs(seed), 1e-8 * scale);
    double lo = std::max(seed - w, 1e-14 * scale);
    double hi = seed + w;
    double flo = B(lo), fhi = B(hi);
    int tries = 0;
    while (flo * fhi > 0.0) {
        if (++tries > 80)
            throw ConvergenceError("shoot root: bracketing failed around seed " +
                                   std::to_string(seed));
        w *= 1.7;
        lo = std::max(seed - w, 1e-14 * scale);
        hi = seed + w;
        flo = B(lo);
        fhi = B(hi);
    }
    // Illinois false position
    double a = lo, b = hi, fa = flo, fb = fhi;
    double root = 0.5 * (a + b);
    for (int it = 0; it < 200; ++it) {
        root = b - fb * (b - a) / (fb - fa);
        if (!(root > a && root < b)) root = 0.5 * (a + b);
        const double fr = B(root);
        if (fr == 0.0) return root;
        if (fa * fr < 0.0) {
            b = root;
            fb = fr;
            fa *= 0.5;
        } else {
            a = root;
            fa = fr;
            fb *= 0.5;
        }
        if (b - a <= tol * (1.0 + std::abs(root))) break;
        // refresh true endpoint values after Illinois damping went stale
        if (it % 24 == 23) {
            fa = B(a);
            fb = B(b);
            if (fa * fb > 0.0) break;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

SolveReport solve_model(const ModelParams& p, const SolveOptions& opt) {
    p.validate();
    SolveReport rep;
    rep.params = p;
    rep.method = opt.method;
    rep.near_singular = (p.K > 0) && (M_PI / std::sqrt(p.K) - p.D < 0.01);

    const int m0 = effective_grid_m(p, opt.grid_m);
    const Grid coarse = Grid::over(-p.D / 2, p.D / 2, m0);
    const Grid fine = Grid::over(-p.D / 2, p.D / 2, 2 * m0 + 1);
    rep.grid = fine;

    // Tridiagonal route (always run: it extrapolates the eigenvalues and
    // seeds the shooting brackets).
    const SymTridiag Tc = build_normal_form_matrix(p, coarse);
    const SymTridiag Tf = build_normal_form_matrix(p, fine);
    const std::vector<double> vc = eig_tridiag_smallest_values(Tc, 2);
    const bool need_vectors = opt.method == Method::Tridiag;
    std::vector<TridiagPair> pf;
    std::vector<double> vf;
    if (need_vectors) {
        pf = eig_tridiag_smallest(Tf, 2);
        vf = {pf[0].value, pf[1].value};
    } else {
        vf = eig_tridiag_smallest_values(Tf, 2);
    }
    const std::array<double, 2> lam_extrap = {(4.0 * vf[0] - vc[0]) / 3.0,
                                              (4.0 * vf[1] - vc[1]) / 3.0};
    rep.extrapolated = true;

    std::array<double, 2> lam_shoot = {0.0, 0.0};
    if (opt.method != Method::Tridiag) {
        lam_shoot[0] = refine_shoot_root(p, Parity::Even, lam_extrap[0], opt.tol, opt.ode_tol);
        lam_shoot[1] = refine_shoot_root(p, Parity::Odd, lam_extrap[1], opt.tol, opt.ode_tol);
    }

    for (int i = 0; i < 2; ++i) {
        EigenPair& e = rep.pairs[i];
        e.index = i + 1;
        e.parity = (i == 0) ? Parity::Even : Parity::Odd;
        e.grid = fine;
        switch (opt.method) {
            case Method::Tridiag:
                e.lambda = lam_extrap[i];
                e.lambda_grid = vf[i];
                e.samples = phi_bar_from_normal_form(p, fine, pf[i].vector);
                break;
            case Method::Shooting:
                e.lambda = lam_shoot[i];
                e.lambda_grid = lam_shoot[i];
                e.samples = shooting_samples(p, fine, lam_shoot[i], e.parity, opt.ode_tol);
                break;
            case Method::Both:
                // Shooting refines the eigenvalue and supplies the samples;
                // the tridiagonal route cross-validates below.
                e.lambda = lam_shoot[i];
                e.lambda_grid = lam_shoot[i];
                e.samples = shooting_samples(p, fine, lam_shoot[i], e.parity, opt.ode_tol);
                break;
        }
        orient_and_normalize(p, fine, e.samples);
    }

    if (rep.pairs[0].lambda >= rep.pairs[1].lambda)
        throw ConvergenceError("solve_model: eigenvalues out of order");

    if (opt.method == Method::Both) {
        rep.method_agreement = std::max(std::abs(lam_shoot[0] - lam_extrap[0]),
                                        std::abs(lam_shoot[1] - lam_extrap[1]));
        const double lam_scale = 1.0 + std::abs(lam_shoot[1]);
        if (!rep.near_singular && rep.method_agreement > 100.0 * opt.tol * lam_scale) {
            std::ostringstream os;
            os << "solve_model: tridiag/shooting disagreement " << rep.method_agreement
               << " exceeds " << 100.0 * opt.tol * lam_scale << " (n=" << p.n << ", K=" << p.K
               << ", D=" << p.D << ")";
            throw ConsistencyError(os.str());
        }
    }

    rep.residual = std::max(ode_defect(p, fine, rep.pairs[0].samples, rep.pairs[0].lambda_grid),
                            ode_defect(p, fine, rep.pairs[1].samples, rep.pairs[1].lambda_grid));
    return rep;
}

}  // namespace specgap
