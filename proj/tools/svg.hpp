#pragma once

#include <string>
#include <vector>

namespace specgap::plotting {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

// Minimal deterministic line plot: axes, ticks, legend, one polyline per
// series.  Output is plain SVG text, byte-stable for identical inputs.
std::string render_svg(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<Series>& series);

}  // namespace specgap::plotting
