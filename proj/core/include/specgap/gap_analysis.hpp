#pragma once

#include <string>
#include <vector>

#include <specgap/model_solver.hpp>

namespace specgap {

struct GapReport {
    ModelParams params;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double gap = 0.0;
    double normalized_gap = 0.0;  // D^2 (lambda2 - lambda1) / pi^2
    SolveReport solve;
};

GapReport gap_report(const ModelParams& p, const SolveOptions& opt = {});

enum class SweepAxis { D, N };
enum class Monotonicity { Increasing, Decreasing, Flat, NonMonotone };

std::string to_string(SweepAxis a);
std::string to_string(Monotonicity m);

struct SweepResult {
    SweepAxis axis = SweepAxis::D;
    std::vector<double> values;      // strictly increasing
    std::vector<GapReport> reports;  // one per value, input order
    Monotonicity verdict = Monotonicity::Flat;  // of the normalized gap
};

// Ties within `flat_tol` on normalized-gap differences classify as flat.
SweepResult sweep(SweepAxis axis, const std::vector<double>& values, const ModelParams& base,
                  const SolveOptions& opt = {}, double flat_tol = 1e-9);

// d lambda_i(cD)c^2/dc at c=1, as the quadrature
//   2 (n-1) \int_0^{D/2} l_K(s) phi_i(s) phi_i'(s) cs_K^{n-1}(s) ds
// over the sampled eigenfunction (derivative by fourth-order differences).
// Equals (1/D) d/dD (D^2 lambda_i).
double perturbation_derivative(const SolveReport& rep, int index);

// The same derivative after integration by parts:
//   (n-1) \int_0^{D/2} phi_i^2 [ (n-3) m_K - (n-1) K ] cs_K^{n-1} ds.
double perturbation_derivative_by_parts(const SolveReport& rep, int index);

// Derivative of the scaled gap:
//   (n-1)(n-3) \int_0^{D/2} m_K (phi_2^2 - phi_1^2) cs_K^{n-1} ds.
double gap_derivative_integral(const SolveReport& rep);

// The unique b in (0, D/2) with phi_1(b) = phi_2(b) after rescaling phi_2 to
// equal half-interval weighted norm; verifies the single sign change of
// phi_2^2 - phi_1^2 and throws PropertyViolation otherwise.
double crossing_point(const SolveReport& rep);

struct RatioCheck {
    double ratio_at_D = 0.0;
    double ratio_at_D_plus = 0.0;
    bool non_decreasing = false;
};

// lambda2/lambda1 compared at D and D + dD (requires n >= 3 and the
// monotonicity hypotheses on D, D + dD).
RatioCheck ratio_monotonicity_check(const ModelParams& p, double dD, const SolveOptions& opt = {});

}  // namespace specgap
