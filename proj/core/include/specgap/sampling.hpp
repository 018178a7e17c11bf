#pragma once

#include <cstddef>
#include <vector>

namespace specgap {
namespace stencil {

// Fourth-order centered differences on a uniform grid with spacing h,
// evaluated with stride t (effective spacing t*h).  The caller guarantees
// the needed neighbors exist.

inline double d1(const std::vector<double>& y, std::size_t i, std::size_t t, double h) {
    const double H = t * h;
    return (y[i - 2 * t] - 8.0 * y[i - t] + 8.0 * y[i + t] - y[i + 2 * t]) / (12.0 * H);
}

inline double d2(const std::vector<double>& y, std::size_t i, std::size_t t, double h) {
    const double H = t * h;
    return (-y[i - 2 * t] + 16.0 * y[i - t] - 30.0 * y[i] + 16.0 * y[i + t] - y[i + 2 * t]) /
           (12.0 * H * H);
}

inline double d3(const std::vector<double>& y, std::size_t i, std::size_t t, double h) {
    const double H = t * h;
    return (y[i - 3 * t] - 8.0 * y[i - 2 * t] + 13.0 * y[i - t] - 13.0 * y[i + t] +
            8.0 * y[i + 2 * t] - y[i + 3 * t]) /
           (8.0 * H * H * H);
}

// Third-order one-sided first derivative at a boundary where the function
// value is known to be 0; y1..y3 are values at distances h, 2h, 3h into the
// interior, and the result is the derivative taken pointing inward.
inline double d1_from_boundary(double y1, double y2, double y3, double h) {
    return (18.0 * y1 - 9.0 * y2 + 2.0 * y3) / (6.0 * h);
}

}  // namespace stencil

// Composite trapezoid of y (values at uniform interior nodes, spacing h)
// with implicit zero boundary values at both ends.
inline double trapezoid_interior(const std::vector<double>& y, double h) {
    double s = 0.0;
    for (double v : y) s += v;
    return h * s;
}

}  // namespace specgap
