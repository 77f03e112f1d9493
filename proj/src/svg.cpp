#include "ergent/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "ergent/errors.hpp"

namespace ergent {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

}  // namespace

std::string emit_svg(const std::vector<SvgSeries>& series, const SvgOptions& options) {
    require(!series.empty(), errc::empty_input, "no series to plot");
    for (const auto& s : series)
        require(!s.points.empty(), errc::empty_input, "series \"" + s.label + "\" is empty");

    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double y_min = x_min, y_max = -x_min;
    for (const auto& s : series) {
        for (auto [x, y] : s.points) {
            if (options.log_y && y <= 0.0) continue;
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            double yv = options.log_y ? std::log10(y) : y;
            y_min = std::min(y_min, yv);
            y_max = std::max(y_max, yv);
        }
    }
    for (const auto& [x, label] : options.x_markers) {
        x_min = std::min(x_min, x);
        x_max = std::max(x_max, x);
    }
    require(std::isfinite(x_min) && std::isfinite(y_min), errc::empty_input,
            "no plottable points");
    if (x_max == x_min) x_max = x_min + 1.0;
    if (y_max == y_min) y_max = y_min + 1.0;

    const double ml = 64, mr = 16, mt = options.title.empty() ? 16 : 36, mb = 44;
    const double pw = options.width - ml - mr;
    const double ph = options.height - mt - mb;
    auto sx = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * pw; };
    auto sy = [&](double y) {
        double yv = options.log_y ? std::log10(y) : y;
        return mt + (1.0 - (yv - y_min) / (y_max - y_min)) * ph;
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
        << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width << ' '
        << options.height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!options.title.empty())
        out << "<text x=\"" << px(ml + pw / 2) << "\" y=\"20\" text-anchor=\"middle\" "
               "font-family=\"sans-serif\" font-size=\"14\">" << options.title
            << "</text>\n";

    // axes
    out << "<line x1=\"" << px(ml) << "\" y1=\"" << px(mt + ph) << "\" x2=\"" << px(ml + pw)
        << "\" y2=\"" << px(mt + ph) << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << px(ml) << "\" y1=\"" << px(mt) << "\" x2=\"" << px(ml)
        << "\" y2=\"" << px(mt + ph) << "\" stroke=\"black\"/>\n";

    const int n_ticks = 5;
    for (int i = 0; i <= n_ticks; ++i) {
        double fx = x_min + (x_max - x_min) * i / n_ticks;
        out << "<line x1=\"" << px(sx(fx)) << "\" y1=\"" << px(mt + ph) << "\" x2=\""
            << px(sx(fx)) << "\" y2=\"" << px(mt + ph + 4) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << px(sx(fx)) << "\" y=\"" << px(mt + ph + 16)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
            << tick_label(fx) << "</text>\n";
        double fy = y_min + (y_max - y_min) * i / n_ticks;
        double ypix = mt + (1.0 - double(i) / n_ticks) * ph;
        out << "<line x1=\"" << px(ml - 4) << "\" y1=\"" << px(ypix) << "\" x2=\"" << px(ml)
            << "\" y2=\"" << px(ypix) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << px(ml - 6) << "\" y=\"" << px(ypix + 3)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
            << tick_label(options.log_y ? std::pow(10.0, fy) : fy) << "</text>\n";
    }
    out << "<text x=\"" << px(ml + pw / 2) << "\" y=\"" << px(mt + ph + 34)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
        << options.x_label << "</text>\n";
    out << "<text x=\"14\" y=\"" << px(mt + ph / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
           "transform=\"rotate(-90 14 " << px(mt + ph / 2) << ")\">" << options.y_label
        << "</text>\n";

    for (const auto& [mx, mlabel] : options.x_markers) {
        out << "<line class=\"marker\" x1=\"" << px(sx(mx)) << "\" y1=\"" << px(mt)
            << "\" x2=\"" << px(sx(mx)) << "\" y2=\"" << px(mt + ph)
            << "\" stroke=\"#888888\" stroke-dasharray=\"4 3\"/>\n";
        if (!mlabel.empty())
            out << "<text x=\"" << px(sx(mx) + 3) << "\" y=\"" << px(mt + 12)
                << "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#555555\">"
                << mlabel << "</text>\n";
    }

    for (std::size_t si = 0; si < series.size(); ++si) {
        const char* color = kPalette[si % (sizeof kPalette / sizeof kPalette[0])];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        bool any = false;
        for (auto [x, y] : series[si].points) {
            if (options.log_y && y <= 0.0) continue;
            if (any) out << ' ';
            out << px(sx(x)) << ',' << px(sy(y));
            any = true;
        }
        out << "\"/>\n";
        if (!series[si].label.empty()) {
            double ly = mt + 14 + 14 * double(si);
            out << "<line x1=\"" << px(ml + pw - 110) << "\" y1=\"" << px(ly - 4)
                << "\" x2=\"" << px(ml + pw - 90) << "\" y2=\"" << px(ly - 4)
                << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
            out << "<text x=\"" << px(ml + pw - 86) << "\" y=\"" << px(ly)
                << "\" font-family=\"sans-serif\" font-size=\"11\">" << series[si].label
                << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace ergent
