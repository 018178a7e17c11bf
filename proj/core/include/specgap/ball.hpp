#pragma once

#include <vector>

#include <specgap/model_solver.hpp>

namespace specgap {

// Geodesic ball of radius R in the n-dimensional space of curvature K.
// K is restricted to {0, 1}; for K = 1 the ball must stay within the
// hemisphere (R <= pi/2).
struct BallSpec {
    int n = 2;
    double K = 1.0;
    double R = 1.0;

    double diameter() const { return 2.0 * R; }
    void validate() const;
};

struct BallSpectrum {
    BallSpec spec;
    double lambda1 = 0.0;   // ell = 0, first radial mode
    double lambda2 = 0.0;   // min of {ell = 0 second mode, ell = 1 first mode}
    int mode2_ell = 0;
    int mode2_radial_index = 1;
    double first_mode_ell1 = 0.0;
    double second_mode_ell0 = 0.0;
    double first_mode_ell2 = 0.0;  // for the mode-ordering sanity property
    std::vector<double> s;   // radial nodes of the first eigenfunction profile
    std::vector<double> u;   // u(s) with u -> 1 at the center
    std::vector<double> du;  // u'(s)
};

// Boundary value u(R) of the radial equation
//   u'' + (n-1)(cs/sn)(s) u' + [ lambda - ell(ell+n-2)/sn^2(s) ] u = 0
// started from the leading Frobenius behavior u = s^ell at eps = 1e-6 R.
// ell must be 0, 1 or 2.
double radial_shoot(const BallSpec& spec, int ell, double lambda, double ode_tol = 1e-12);

BallSpectrum ball_spectrum(const BallSpec& spec, double tol = 1e-10);

// Gap comparison against the model problem at the ball's diameter, plus the
// domain-monotonicity bound lambda_1 >= model lambda_1 and the sharper pair
// lambda_1 >= n model-lambda_1, lambda_2 >= n model-lambda_1 + 3 pi^2/D^2
// (the latter for n >= 3).  Requires K = 0, or K = 1 with 2R <= pi/2.
struct GapComparison {
    BallSpectrum ball;
    double model_lambda1 = 0.0;
    double model_lambda2 = 0.0;
    double gap_margin = 0.0;       // (ball gap) - (model gap)
    double domain_margin = 0.0;    // lambda_1 - model lambda_1
    double sharp_l1_margin = 0.0;  // lambda_1 - n model-lambda_1
    double sharp_l2_margin = 0.0;  // lambda_2 - (n model-lambda_1 + 3 pi^2/D^2)
    bool sharp_l2_applies = false;
    bool all_hold = false;
};

GapComparison gap_comparison_check(const BallSpec& spec, const SolveOptions& model_opt = {});

// Hessian bound of log u for the radial first eigenfunction: both principal
// values, (log u)'' radially and (log u)' (cs/sn) tangentially, must be
// <= -model lambda_1 at the interior sample nodes (K = 1, 2R <= pi/2).
struct BallHessian {
    double bound = 0.0;            // -model lambda_1
    double max_radial = 0.0;       // max over nodes of (log u)''
    double max_tangential = 0.0;   // max over nodes of (log u)' (cs/sn)
    double origin_value = 0.0;     // common s -> 0 limit u''(0)/u(0) = -lambda_1/n
    double tolerance = 0.0;
    bool ok = false;
};

BallHessian ball_hessian_check(const BallSpec& spec, const SolveOptions& model_opt = {});

}  // namespace specgap
