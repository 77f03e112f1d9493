#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ergent {

struct SvgSeries {
    std::vector<std::pair<double, double>> points;
    std::string label;
};

struct SvgOptions {
    int width = 720;
    int height = 480;
    bool log_y = false;
    std::string title;
    std::string x_label = "x";
    std::string y_label = "y";
    // Vertical reference lines (data x, label), e.g. the Heisenberg time.
    std::vector<std::pair<double, std::string>> x_markers;
};

/// Self-contained deterministic SVG line plot: fixed palette, axes with
/// ticks, legend, optional log y scale, no external assets. Identical
/// input yields identical bytes.
std::string emit_svg(const std::vector<SvgSeries>& series, const SvgOptions& options);

}  // namespace ergent
