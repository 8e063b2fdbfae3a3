#pragma once

#include <string>
#include <vector>

namespace disclose::cli {

struct Series {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;  // same length as x
};

// Minimal single-panel line chart: axes, ticks, one polyline per series,
// legend. Self-contained SVG, no external references, deterministic bytes.
std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<Series>& series);

}  // namespace disclose::cli
