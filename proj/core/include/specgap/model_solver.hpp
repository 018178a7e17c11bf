#pragma once

#include <array>
#include <string>
#include <vector>

#include <specgap/curvature.hpp>
#include <specgap/tridiag.hpp>

namespace specgap {

// Uniform grid of m interior nodes on (a, b); the Dirichlet endpoints are
// excluded.  h = (b-a)/(m+1), node(i) = a + (i+1) h.
struct Grid {
    double a = 0.0;
    double b = 1.0;
    int m = 0;
    double h = 0.0;

    static Grid over(double a, double b, int m);
    double node(int i) const { return a + (i + 1) * h; }
    std::vector<double> nodes() const;
};

enum class Parity { Even, Odd };
enum class Method { Tridiag, Shooting, Both };

std::string to_string(Method m);

// One eigenvalue with its sampled eigenfunction in the original variable
// (phi-bar, not the Schrodinger-form variable), sign-oriented and normalized
// to unit L^2 norm with weight cs_K^{n-1} ds over [-D/2, D/2].
struct EigenPair {
    int index = 1;              // 1 or 2
    double lambda = 0.0;        // best estimate (extrapolated / shooting-refined)
    double lambda_grid = 0.0;   // eigenvalue consistent with `samples` discretization
    Parity parity = Parity::Even;
    Grid grid;
    std::vector<double> samples;
};

struct SolveOptions {
    int grid_m = 2000;          // coarse grid; samples live on the 2m+1 refinement
    Method method = Method::Both;
    double tol = 1e-10;         // eigenvalue tolerance for shooting root refinement
    double ode_tol = 1e-12;     // local error control of the shooting integrator
};

struct SolveReport {
    ModelParams params;
    Method method = Method::Both;
    Grid grid;                   // fine grid carrying the samples
    bool extrapolated = false;   // tridiagonal eigenvalues Richardson-extrapolated
    bool near_singular = false;  // D within 0.01 of pi/sqrt(K); accuracy degrades
    double residual = 0.0;       // max defect of phi'' - (n-1) tn phi' + lambda phi
    double method_agreement = 0.0;  // max_i |lambda_shoot,i - lambda_tridiag,i| (Both)
    std::array<EigenPair, 2> pairs;

    const EigenPair& pair(int index) const { return pairs[index - 1]; }
};

// Finite-difference matrix of the Schrodinger form -phi'' + V phi on g:
// diagonal 2/h^2 + V(s_i), off-diagonal -1/h^2.
SymTridiag build_normal_form_matrix(const ModelParams& p, const Grid& g);

// Boundary value phi(D/2) of the model equation
//   phi'' = (n-1) tn_K(s) phi' - lambda phi
// integrated from s = 0 with (phi, phi')(0) = (1, 0) for even parity and
// (0, 1) for odd.  By symmetry this determines the Dirichlet eigenvalues.
double shoot(const ModelParams& p, double lambda, Parity parity, double ode_tol = 1e-12);

// First two eigenvalues/eigenfunctions of the model problem.
SolveReport solve_model(const ModelParams& p, const SolveOptions& opt = {});

}  // namespace specgap
