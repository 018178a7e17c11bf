#include <specgap/geometry.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include <specgap/curvature.hpp>

namespace specgap {

namespace {

using Vec = std::vector<double>;

Vec add(const Vec& a, const Vec& b, double ca = 1.0, double cb = 1.0) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = ca * a[i] + cb * b[i];
    return out;
}

void check_same_space(const ModelPoint& a, const ModelPoint& b) {
    if (a.K != b.K || a.x.size() != b.x.size())
        throw PreconditionError("geometry: points live in different model spaces");
}

double membership_defect(double K, const Vec& x) {
    if (K == 0.0) return 0.0;
    return std::abs(K * model_dot(K, x, x) - 1.0);
}

}  // namespace

double model_dot(double K, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw PreconditionError("model_dot: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) s += a[i] * b[i];
    const double last = a.back() * b.back();
    return K < 0 ? s - last : s + last;
}

ModelPoint make_point(double K, Vec coords) {
    ModelPoint p{K, std::move(coords)};
    if (K != 0.0) {
        if (p.x.size() < 3) throw PreconditionError("make_point: need ambient dimension >= 3");
        if (membership_defect(K, p.x) > 1e-9)
            throw DomainError("make_point: coordinates off the model quadric");
        if (K < 0 && !(p.x.back() > 0))
            throw DomainError("make_point: lower hyperboloid sheet");
    }
    return p;
}

ModelPoint exp_map(const ModelPoint& x, const Vec& v, double r) {
    if (v.size() != x.x.size()) throw PreconditionError("exp_map: dimension mismatch");
    if (x.K != 0.0) {
        if (std::abs(model_dot(x.K, v, v) - 1.0) > 1e-9)
            throw PreconditionError("exp_map: direction is not a unit vector");
        if (std::abs(model_dot(x.K, v, x.x)) > 1e-9)
            throw PreconditionError("exp_map: direction is not tangent at x");
    }
    ModelPoint out;
    out.K = x.K;
    out.x = add(x.x, v, cs(x.K, r), sn(x.K, r));
    return out;
}

double distance(const ModelPoint& x, const ModelPoint& y) {
    check_same_space(x, y);
    const double K = x.K;
    if (K == 0.0) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.x.size(); ++i) {
            const double d = x.x[i] - y.x[i];
            s += d * d;
        }
        return std::sqrt(s);
    }
    if (membership_defect(K, x.x) > 1e-10 || membership_defect(K, y.x) > 1e-10)
        throw DomainError("distance: numerical drift off the model quadric");
    const double c = K * model_dot(K, x.x, y.x);  // cs_K(d)
    if (K > 0) {
        if (c > 1.0 + 1e-10 || c < -1.0 - 1e-10)
            throw DomainError("distance: inner product outside [-1/K, 1/K]");
        if (c < -1.0 + 1e-12) throw DomainError("distance: antipodal pair (d = pi/sqrt K)");
        return std::acos(std::clamp(c, -1.0, 1.0)) / std::sqrt(K);
    }
    return std::acosh(std::max(c, 1.0)) / std::sqrt(-K);
}

VariationProbe make_probe(const ModelPoint& x0, const ModelPoint& y0, int normal_index) {
    check_same_space(x0, y0);
    const double K = x0.K;
    if (K == 0.0) throw PreconditionError("make_probe: use K != 0 quadric models");
    VariationProbe pr;
    pr.K = K;
    pr.x0 = x0;
    pr.y0 = y0;
    pr.d0 = distance(x0, y0);
    if (!(pr.d0 > 0)) throw PreconditionError("make_probe: coincident endpoints");
    const std::size_t dim = x0.x.size();
    // gamma'(-d0/2) from y0 = cs(d0) x0 + sn(d0) e_n.
    pr.e_n = add(y0.x, x0.x, 1.0 / sn(K, pr.d0), -cs(K, pr.d0) / sn(K, pr.d0));
    // Orthonormal complement of {x0, e_n} under the model inner product:
    // Gram-Schmidt over the ambient basis (tangent vectors are spacelike for
    // K < 0, so the restricted form is positive definite).
    std::vector<Vec> basis;
    Vec xn = x0.x;  // normalize against the base point with its sign
    for (std::size_t k = 0; k < dim && basis.size() < dim - 2; ++k) {
        Vec cand(dim, 0.0);
        cand[k] = 1.0;
        const double xx = model_dot(K, xn, xn);
        cand = add(cand, xn, 1.0, -model_dot(K, cand, xn) / xx);
        cand = add(cand, pr.e_n, 1.0, -model_dot(K, cand, pr.e_n));
        for (const Vec& b : basis) cand = add(cand, b, 1.0, -model_dot(K, cand, b));
        const double nrm2 = model_dot(K, cand, cand);
        if (nrm2 < 1e-12) continue;
        const double inv = 1.0 / std::sqrt(nrm2);
        for (double& v : cand) v *= inv;
        basis.push_back(std::move(cand));
    }
    if (basis.size() != dim - 2)
        throw ConvergenceError("make_probe: failed to complete the normal frame");
    pr.normals = std::move(basis);
    if (normal_index < 1 || normal_index > static_cast<int>(pr.normals.size()))
        throw PreconditionError("make_probe: normal index out of range 1..n-1");
    pr.normal_index = normal_index;
    return pr;
}

std::vector<double> probe_endpoint_x(const VariationProbe& pr, double r) {
    const Vec& e = pr.normals[pr.normal_index - 1];
    return add(pr.x0.x, e, cs(pr.K, r), sn(pr.K, r));
}

std::vector<double> probe_endpoint_y(const VariationProbe& pr, double r) {
    const Vec& e = pr.normals[pr.normal_index - 1];
    return add(pr.y0.x, e, cs(pr.K, r), sn(pr.K, r));
}

double probe_dr(const VariationProbe& pr, double r) {
    ModelPoint p{pr.K, probe_endpoint_x(pr, r)};
    ModelPoint q{pr.K, probe_endpoint_y(pr, r)};
    return distance(p, q);
}

namespace {

// Unit tangent at p toward q: normalize q - K <p,q> p.  The normalization
// constant 1/sqrt(K^{-1} - K <p,q>^2) must have a positive radicand; this is
// verified numerically before taking the root.
Vec unit_toward(double K, const Vec& p, const Vec& q) {
    const double pq = model_dot(K, p, q);
    const double rad = 1.0 / K - K * pq * pq;
    if (!(rad > 0))
        throw DomainError("variation: nonpositive radicand in the tangent normalization");
    return add(q, p, 1.0 / std::sqrt(rad), -K * pq / std::sqrt(rad));
}

}  // namespace

std::vector<double> variation_eta(const VariationProbe& pr, double r, double s) {
    if (std::abs(s) > pr.d0 / 2 + 1e-12)
        throw PreconditionError("variation_eta: |s| exceeds d0/2");
    const Vec p = probe_endpoint_x(pr, r);
    const Vec q = probe_endpoint_y(pr, r);
    const ModelPoint pp{pr.K, p}, qq{pr.K, q};
    const double dr = distance(pp, qq);
    const Vec U = unit_toward(pr.K, p, q);
    const double t = dr / pr.d0 * s + dr / 2.0;
    return add(p, U, cs(pr.K, t), sn(pr.K, t));
}

double dr_expansion_check(const VariationProbe& pr) {
    const double h = 1e-3;
    const double d0 = probe_dr(pr, 0.0);
    const double d1p = probe_dr(pr, h), d1m = probe_dr(pr, -h);
    const double d2p = probe_dr(pr, 2 * h), d2m = probe_dr(pr, -2 * h);
    const double second =
        (-d2m + 16.0 * d1m - 30.0 * d0 + 16.0 * d1p - d2p) / (12.0 * h * h);
    return 0.5 * second;
}

namespace {

// Ambient s-derivative of eta at s = +-d0/2 as a function of r.
Vec eta_s_derivative(const VariationProbe& pr, double r, bool at_end) {
    const Vec p = probe_endpoint_x(pr, r);
    const Vec q = probe_endpoint_y(pr, r);
    const ModelPoint pp{pr.K, p}, qq{pr.K, q};
    const double dr = distance(pp, qq);
    const Vec U = unit_toward(pr.K, p, q);
    const double t = at_end ? dr : 0.0;
    // d/ds [cs(t) p + sn(t) U] = (dr/d0) [-K sn(t) p + cs(t) U]
    return add(p, U, -pr.K * sn(pr.K, t) * dr / pr.d0, cs(pr.K, t) * dr / pr.d0);
}

Vec tangential_projection(double K, const Vec& w, const Vec& at) {
    if (K == 0.0) return w;
    return add(w, at, 1.0, -K * model_dot(K, w, at));
}

}  // namespace

SecondDerivReport second_derivative_in_r_check(const VariationProbe& pr) {
    const double t2 = tn(pr.K, pr.d0 / 2);
    SecondDerivReport rep;
    rep.target = -2.0 / pr.d0 * t2 - t2 * t2;

    for (int side = 0; side < 2; ++side) {
        const bool at_end = side == 1;
        const Vec base = at_end ? pr.y0.x : pr.x0.x;
        // gamma'(s) at the endpoint in ambient coordinates.
        Vec en_here;
        if (at_end)
            en_here = add(pr.x0.x, pr.e_n, -pr.K * sn(pr.K, pr.d0), cs(pr.K, pr.d0));
        else
            en_here = pr.e_n;

        auto stencil_second = [&](double h) {
            const Vec f0 = eta_s_derivative(pr, 0.0, at_end);
            const Vec fp = eta_s_derivative(pr, h, at_end);
            const Vec fm = eta_s_derivative(pr, -h, at_end);
            const Vec fpp = eta_s_derivative(pr, 2 * h, at_end);
            const Vec fmm = eta_s_derivative(pr, -2 * h, at_end);
            Vec out(f0.size());
            for (std::size_t i = 0; i < f0.size(); ++i)
                out[i] = (-fmm[i] + 16.0 * fm[i] - 30.0 * f0[i] + 16.0 * fp[i] - fpp[i]) /
                         (12.0 * h * h);
            return out;
        };
        const Vec s1 = stencil_second(1e-2);
        const Vec s2 = stencil_second(5e-3);
        const Vec s3 = stencil_second(2.5e-3);
        Vec r1(s1.size()), r2(s1.size());
        for (std::size_t i = 0; i < s1.size(); ++i) {
            r1[i] = (16.0 * s2[i] - s1[i]) / 15.0;
            r2[i] = (16.0 * s3[i] - s2[i]) / 15.0;
        }
        const Vec proj = tangential_projection(pr.K, r2, base);
        const double en_coeff = model_dot(pr.K, proj, en_here);
        double spread = 0.0;
        for (std::size_t i = 0; i < r1.size(); ++i)
            spread = std::max(spread, std::abs(r2[i] - r1[i]));
        rep.ladder_spread = std::max(rep.ladder_spread, spread);
        if (at_end)
            rep.en_coeff_end = en_coeff;
        else
            rep.en_coeff_start = en_coeff;
        for (const Vec& nrm : pr.normals) {
            const double c = model_dot(pr.K, proj, nrm);
            rep.max_normal_component = std::max(rep.max_normal_component, std::abs(c));
        }
    }
    return rep;
}

}  // namespace specgap
