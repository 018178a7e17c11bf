#pragma once

#include <vector>

#include <specgap/model_solver.hpp>

namespace specgap {

// f = (log phi_1)' = phi_1'/phi_1 sampled on interior nodes (outermost two
// excluded on each side).  Derivatives of phi_1 come from fourth-order
// stencils on the smooth samples; quotients are formed afterwards so the
// stencil error carries no pole amplification.
struct LogDerivativeProfile {
    ModelParams params;
    double lambda1 = 0.0;       // best eigenvalue estimate
    double lambda1_grid = 0.0;  // eigenvalue consistent with the samples
    Grid grid;
    std::vector<double> phi;    // phi_1 samples (normalized, positive)
    std::vector<int> idx;       // profile node indices into grid
    std::vector<double> f;      // f at idx
};

LogDerivativeProfile log_derivative_profile(const SolveReport& rep);

// Max residual of the first-order equation f' = (n-1) tn f - lambda_1 - f^2
// over nodes where phi_1 is bounded away from its Dirichlet zeros.
// Converges to 0 at O(h^2) in the sample spacing.
double riccati_residual(const LogDerivativeProfile& prof);

// Max residual of
//   f'' + 2 f f' - tn [ (n+1) f' + 2 lambda_1 + 2 f^2 ] - (n-1)(K - tn^2) f
// evaluated with a widened differencing stride so the third-derivative
// stencil stays above the double-precision noise floor.
double second_order_residual(const LogDerivativeProfile& prof);

// w = phi_2/phi_1 on [0, D/2]; the endpoint value comes from the one-sided
// derivative ratio phi_2'(D/2)/phi_1'(D/2).
struct RatioProfile {
    ModelParams params;
    double lambda1 = 0.0, lambda2 = 0.0;  // sample-consistent values
    Grid grid;
    std::vector<int> idx;        // nodes in [0, D/2) with phi_1 above floor
    std::vector<double> w;       // w at idx
    double w_end = 0.0;          // w(D/2) by derivative ratio
    std::vector<double> phi1, phi2;
};

RatioProfile ratio_profile(const SolveReport& rep);

// Max residual of w'' - (n-1) tn w' + 2 f w' + (lambda_2 - lambda_1) w = 0.
double w_equation_residual(const RatioProfile& prof);

// Conditions on psi = (log phi_1^{D'})' used by the log-concavity estimate,
// checked on [0, D/2] with the model solved on the slightly larger [-D'/2,
// D'/2]:
//   elliptic:  psi'' + 2 psi psi' - tn [ (n+1) psi' + 2 psi^2 + 2 lambda_1 ]
//              - (n-1)(K - tn^2) psi  <= 0
//   slope:     2 psi' - 4 tn psi - (n-1)(K - tn^2)  <= 0
// Margins are max LHS values; they must stay below the one-sided tolerance.
struct PsiVerdict {
    double Dprime = 0.0;
    double lambda1_D = 0.0;        // eigenvalue entering the elliptic condition
    double lambda1_Dprime = 0.0;
    double elliptic_margin = 0.0;  // max LHS of the elliptic condition
    double slope_margin = 0.0;     // max LHS of the slope condition
    double tolerance = 0.0;
    bool elliptic_ok = false;
    bool slope_ok = false;
    double n2_bound_margin = 0.0;  // lambda_1(D) - (7/2) K, recorded for n = 2
};

// K >= 0 required; for K > 0 also D < pi/(2 sqrt K).  Dprime = 0 chooses
// min(1.05 D, midpoint toward the hypothesis limit).  `exploratory` skips the
// K-sign precondition and only reports margins (no verdict is attached).
PsiVerdict psi_inequalities(const ModelParams& p, double Dprime = 0.0,
                            const SolveOptions& opt = {}, bool exploratory = false);

// psi'(0) by symmetric differencing of the profile; equals -lambda_1.
double hessian_limit_check(const SolveReport& rep);

// Eigenvalue lower bounds tied to the model problem.
struct LowerBounds {
    double lambda1 = 0.0;
    double closed_form_bound = 0.0;   // max(pi^2/D^2 - (n-1)K/2, 0)
    double closed_form_margin = 0.0;  // lambda1 - closed_form_bound
    bool closed_form_applies = false; // derivation valid for n = 1 and n >= 3
    double variational_bound = 0.0;   // max(pi^2/D^2 + min V, 0), valid for all n
    double variational_margin = 0.0;
    double n_lambda1 = 0.0;           // reference value n * lambda_1
    double n_lambda1_plus_gap = 0.0;  // n * lambda_1 + 3 pi^2 / D^2
};

LowerBounds lower_bound_suite(const ModelParams& p, const SolveOptions& opt = {});

}  // namespace specgap
