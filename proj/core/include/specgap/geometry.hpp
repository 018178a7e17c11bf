#pragma once

#include <vector>

#include <specgap/errors.hpp>

namespace specgap {

// Quadric models of the space of constant curvature K != 0 in R^{n+1}:
//   K > 0:  <x, x> = 1/K with the Euclidean inner product,
//   K < 0:  <x, x> = 1/K with the Lorentz product (+...+-), x_last > 0.
// K = 0 uses the affine chart: plain points with Euclidean geometry and the
// same formulas in their flat limits.
struct ModelPoint {
    double K = 1.0;
    std::vector<double> x;
};

// Euclidean or Lorentz inner product matching the curvature sign.
double model_dot(double K, const std::vector<double>& a, const std::vector<double>& b);

// Validates quadric membership (1e-9) and, for K < 0, the sheet condition.
ModelPoint make_point(double K, std::vector<double> coords);

// Geodesic flow: cs(r) x + sn(r) v for a unit tangent v (checked: <v,v> = 1,
// <v,x> = 0 to 1e-9).  K = 0 degenerates to x + r v.
ModelPoint exp_map(const ModelPoint& x, const std::vector<double>& v, double r);

// Distance via K^{-1} cs(d) = <x, y>; inputs drifting off the model by more
// than 1e-10 raise DomainError, antipodal pairs (K > 0) are rejected.
double distance(const ModelPoint& x, const ModelPoint& y);

// Two-endpoint geodesic variation: both endpoints of the geodesic from x0 to
// y0 move along geodesics in the direction of a shared parallel normal e_i.
struct VariationProbe {
    double K = 1.0;
    ModelPoint x0, y0;
    double d0 = 0.0;
    std::vector<double> e_n;                  // gamma'(-d0/2), tangent at x0
    std::vector<std::vector<double>> normals; // parallel normal frame e_1..e_{n-1}
    int normal_index = 0;                     // which e_i drives the variation
};

VariationProbe make_probe(const ModelPoint& x0, const ModelPoint& y0, int normal_index);

// Endpoint geodesics p(r), q(r) and the connecting-geodesic family
//   eta(r, s) = cs(t) p(r) + sn(t) U(r),  t = (d_r/d0) s + d_r/2,
// with U(r) the unit tangent at p(r) toward q(r).
std::vector<double> probe_endpoint_x(const VariationProbe& pr, double r);  // p(r)
std::vector<double> probe_endpoint_y(const VariationProbe& pr, double r);  // q(r)
double probe_dr(const VariationProbe& pr, double r);                       // d(p(r), q(r))
std::vector<double> variation_eta(const VariationProbe& pr, double r, double s);

// Symmetric second difference of r -> d_r over {0, +-h, +-2h} (h = 1e-3),
// halved: the r^2 coefficient of d_r, which must equal -tn(d0/2).
double dr_expansion_check(const VariationProbe& pr);

// Second covariant r-derivative of the s-derivative of eta at the endpoints,
// by a fourth-order stencil ladder Richardson-combined over h in
// {1e-2, 5e-3, 2.5e-3}, projected onto the tangent space.  The result must be
// (-(2/d0) tn(d0/2) - tn^2(d0/2)) e_n with vanishing normal components.
struct SecondDerivReport {
    double target = 0.0;            // closed-form e_n coefficient
    double en_coeff_start = 0.0;    // measured at s = -d0/2
    double en_coeff_end = 0.0;      // measured at s = +d0/2
    double max_normal_component = 0.0;
    double ladder_spread = 0.0;     // difference of the two Richardson levels
};

SecondDerivReport second_derivative_in_r_check(const VariationProbe& pr);

}  // namespace specgap
