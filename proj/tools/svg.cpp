#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace disclose::cli {

namespace {

constexpr double kWidth = 640.0, kHeight = 400.0;
constexpr double kLeft = 64.0, kRight = 604.0;   // plot box
constexpr double kTop = 40.0, kBottom = 356.0;

const char* kPalette[] = {"#1f6fb2", "#d1452c", "#3a8c45", "#8452a0"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Range {
    double lo, hi;
    double place(double v, double a, double b) const {
        return a + (v - lo) / (hi - lo) * (b - a);
    }
};

Range span(const std::vector<Series>& series, bool vertical) {
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (const auto& s : series) {
        for (const double v : vertical ? s.y : s.x) {
            if (!std::isfinite(v)) continue;
            lo = first ? v : std::min(lo, v);
            hi = first ? v : std::max(hi, v);
            first = false;
        }
    }
    if (first) throw std::domain_error("render_line_chart: no finite data");
    if (lo == hi) { lo -= 0.5; hi += 0.5; }
    const double pad = 0.04 * (hi - lo);
    return {lo - pad, hi + pad};
}

void text(std::string& out, double x, double y, const std::string& anchor,
          const std::string& s, const char* fill = "#333333") {
    out += "<text x=\"" + num(x) + "\" y=\"" + num(y) +
           "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" + fill +
           "\" text-anchor=\"" + anchor + "\">" + s + "</text>\n";
}

}  // namespace

std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<Series>& series) {
    const Range xr = span(series, false);
    const Range yr = span(series, true);

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
           "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) +
           " " + num(kHeight) + "\">\n";
    out += "<rect width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
           "\" fill=\"#ffffff\"/>\n";
    text(out, (kLeft + kRight) / 2, 22.0, "middle", title);

    // frame and ticks: 5 divisions each way
    out += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" +
           num(kRight - kLeft) + "\" height=\"" + num(kBottom - kTop) +
           "\" fill=\"none\" stroke=\"#888888\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double fx = xr.lo + (xr.hi - xr.lo) * i / 5.0;
        const double px = xr.place(fx, kLeft, kRight);
        out += "<line x1=\"" + num(px) + "\" y1=\"" + num(kBottom) +
               "\" x2=\"" + num(px) + "\" y2=\"" + num(kBottom + 5) +
               "\" stroke=\"#888888\"/>\n";
        text(out, px, kBottom + 18, "middle", num(fx));

        const double fy = yr.lo + (yr.hi - yr.lo) * i / 5.0;
        const double py = yr.place(fy, kBottom, kTop);
        out += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(py) +
               "\" x2=\"" + num(kLeft) + "\" y2=\"" + num(py) +
               "\" stroke=\"#888888\"/>\n";
        text(out, kLeft - 8, py + 4, "end", num(fy));
    }
    text(out, (kLeft + kRight) / 2, kHeight - 10, "middle", x_label);
    out += "<text x=\"16\" y=\"" + num((kTop + kBottom) / 2) +
           "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\" "
           "text-anchor=\"middle\" transform=\"rotate(-90 16 " +
           num((kTop + kBottom) / 2) + ")\">" + y_label + "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* color = kPalette[k % (sizeof kPalette / sizeof *kPalette)];
        out += "<polyline fill=\"none\" stroke=\"";
        out += color;
        out += "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (i) out += ' ';
            out += num(xr.place(s.x[i], kLeft, kRight));
            out += ',';
            out += num(yr.place(s.y[i], kBottom, kTop));
        }
        out += "\"/>\n";
        text(out, kRight - 6, kTop + 16 + 16 * static_cast<double>(k), "end",
             s.name, color);
    }
    out += "</svg>\n";
    return out;
}

}  // namespace disclose::cli
