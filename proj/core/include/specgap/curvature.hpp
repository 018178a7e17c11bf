#pragma once

#include <specgap/errors.hpp>

namespace specgap {

// Generalized trigonometric kernels of constant curvature K.
//
// sn solves sn'' + K sn = 0 with sn(0) = 0, sn'(0) = 1, so
//   K > 0:  sin(sqrt(K) s)/sqrt(K)
//   K = 0:  s
//   K < 0:  sinh(sqrt(-K) s)/sqrt(-K)
// cs = sn' and tn = K sn/cs = -cs'/cs (note the sign: tn < 0 for K < 0, s > 0).
// Near K = 0 the branches are evaluated by a common power series so sweeps
// over K stay continuous.
double sn(double K, double s);
double cs(double K, double s);
double tn(double K, double s);

// Largest |s| at which tn/cs-based expressions are evaluable:
// pi/(2 sqrt K) minus a strict 1e-12 margin for K > 0, +infinity otherwise.
double tn_domain_limit(double K);

// Auxiliaries driving the diameter-perturbation integrals:
//   l(s) = tn(s) + s K cs^{-2}(s)      (odd; sign = sign of K on its domain)
//   m(s) = l'(s)/2 = K cs^{-2}(s) (1 + s tn(s))   (even)
double l_fn(double K, double s);
double m_fn(double K, double s);

// For K < 0: the unique positive zero of m'; m is increasing on [0, a(K)].
// Scales as a(K) = a(-1)/sqrt(-K).
double a_of_k(double K);

// Potential of the Schrodinger form of the model operator:
//   V(s) = ((n-1) K / 4) ((n-3) cs^{-2}(s) - (n-1))
// V == 0 for n = 1 or K = 0, and V == -K for n = 3.
double potential(int n, double K, double s);

// Parameters of the one-dimensional model problem on [-D/2, D/2].
struct ModelParams {
    int n = 2;       // dimension, >= 1
    double K = 1.0;  // sectional curvature
    double D = 1.0;  // diameter; 0 < D < pi/sqrt(K) when K > 0

    void validate() const;  // throws PreconditionError
};

}  // namespace specgap
