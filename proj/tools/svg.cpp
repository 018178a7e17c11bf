#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace specgap::plotting {

namespace {

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string gnum(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string render_svg(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<Series>& series) {
    const double W = 720, H = 480;
    const double L = 80, R = 30, T = 46, B = 56;
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const Series& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    if (!(xmax > xmin)) xmax = xmin + 1;
    if (!(ymax > ymin)) {
        ymax = ymin + 1;
        ymin -= 1;
    }
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;
    auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
    auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
         "font-family=\"sans-serif\">" << title << "</text>\n";
    // axes
    o << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
      << "\" stroke=\"black\"/>\n";
    o << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B
      << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double x = xmin + (xmax - xmin) * i / 5.0;
        const double y = ymin + (ymax - ymin) * i / 5.0;
        o << "<line x1=\"" << num(px(x)) << "\" y1=\"" << H - B << "\" x2=\"" << num(px(x))
          << "\" y2=\"" << H - B + 5 << "\" stroke=\"black\"/>\n";
        o << "<text x=\"" << num(px(x)) << "\" y=\"" << H - B + 20
          << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">" << gnum(x)
          << "</text>\n";
        o << "<line x1=\"" << L - 5 << "\" y1=\"" << num(py(y)) << "\" x2=\"" << L << "\" y2=\""
          << num(py(y)) << "\" stroke=\"black\"/>\n";
        o << "<text x=\"" << L - 8 << "\" y=\"" << num(py(y) + 4)
          << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">" << gnum(y)
          << "</text>\n";
    }
    o << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 14
      << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" << x_label
      << "</text>\n";
    o << "<text x=\"18\" y=\"" << (T + H - B) / 2
      << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" transform=\""
      << "rotate(-90 18 " << (T + H - B) / 2 << ")\">" << y_label << "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const Series& s = series[k];
        const char* color = kColors[k % 6];
        o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (i) o << ' ';
            o << num(px(s.x[i])) << ',' << num(py(s.y[i]));
        }
        o << "\"/>\n";
        const double ly = T + 16 + 16 * k;
        o << "<line x1=\"" << W - R - 150 << "\" y1=\"" << ly - 4 << "\" x2=\"" << W - R - 120
          << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        o << "<text x=\"" << W - R - 114 << "\" y=\"" << ly
          << "\" font-size=\"12\" font-family=\"sans-serif\">" << s.label << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace specgap::plotting
