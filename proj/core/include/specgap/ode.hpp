#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include <specgap/errors.hpp>

namespace specgap {

using State2 = std::array<double, 2>;

struct OdeOptions {
    double rel_tol = 1e-12;
    double abs_tol = 1e-14;
    double initial_step = 0.0;  // 0: choose from span
    std::size_t max_steps = 4'000'000;
};

// Adaptive Dormand-Prince 5(4) for two-state systems y' = f(s, y).
// Integrates from s0 to s1 (s1 > s0 assumed by the callers here) and invokes
// `on_step(s, y)` after every accepted step.  Throws ConvergenceError with the
// reached abscissa on step-size underflow.
template <typename Rhs, typename StepCb>
State2 integrate_dp54(Rhs&& f, double s0, double s1, State2 y, const OdeOptions& opt,
                      StepCb&& on_step) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                            e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                            e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    const double span = s1 - s0;
    if (span == 0.0) return y;
    double s = s0;
    double h = opt.initial_step > 0 ? opt.initial_step : span / 64.0;
    const double h_floor = std::max(span, std::abs(s1)) * 1e-15;

    State2 k1, k2, k3, k4, k5, k6, k7, yt, y5;
    f(s, y, k1);
    for (std::size_t step = 0; step < opt.max_steps; ++step) {
        if (s >= s1) return y;
        if (h > s1 - s) h = s1 - s;
        if (h < h_floor)
            throw ConvergenceError("integrate: step size underflow at s=" + std::to_string(s), s);

        for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * a21 * k1[i];
        f(s + c2 * h, yt, k2);
        for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        f(s + c3 * h, yt, k3);
        for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        f(s + c4 * h, yt, k4);
        for (int i = 0; i < 2; ++i)
            yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        f(s + c5 * h, yt, k5);
        for (int i = 0; i < 2; ++i)
            yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        f(s + h, yt, k6);
        for (int i = 0; i < 2; ++i)
            y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        f(s + h, y5, k7);

        double err = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double ei =
                h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double sc = opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
            err = std::max(err, std::abs(ei) / sc);
        }
        if (err <= 1.0) {
            s += h;
            y = y5;
            k1 = k7;  // FSAL
            on_step(s, y);
        }
        const double fac = (err > 0) ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::min(5.0, std::max(0.2, fac));
    }
    throw ConvergenceError("integrate: exceeded step budget at s=" + std::to_string(s), s);
}

template <typename Rhs>
State2 integrate_dp54(Rhs&& f, double s0, double s1, State2 y, const OdeOptions& opt = {}) {
    return integrate_dp54(static_cast<Rhs&&>(f), s0, s1, y, opt, [](double, const State2&) {});
}

}  // namespace specgap
