#include "cyclesync/chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cyclesync {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 630.0;   // legend lives to the right of this
constexpr double kTop = 45.0;
constexpr double kBottom = 450.0;

constexpr const char* kPalette[] = {
    "#1f6fb2", "#d24d3e", "#3a9a5c", "#8a5fb0", "#c98a28",
    "#2aa0a8", "#b0467a", "#6b7f2e", "#5d6dc4", "#a0522d",
};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string escape_xml(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string fmt(double v, const char* spec = "%.2f") {
    char buf[40];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

struct Range {
    double lo = 0.0;
    double hi = 0.0;

    void expand(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad_if_degenerate() {
        if (hi <= lo) {
            lo -= 1.0;
            hi += 1.0;
        }
    }
    [[nodiscard]] double span() const { return hi - lo; }
};

const std::vector<double>& abscissa_of(const ChartSpec& spec, const ChartSeries& series) {
    return series.x.empty() ? spec.x : series.x;
}

}  // namespace

std::string render_svg(const ChartSpec& spec) {
    if (spec.series.empty()) throw std::invalid_argument("chart needs at least one series");

    Range xr;
    Range yr;
    bool first = true;
    for (const ChartSeries& s : spec.series) {
        const std::vector<double>& xs = abscissa_of(spec, s);
        if (s.y.empty()) throw std::invalid_argument("series '" + s.name + "' is empty");
        if (xs.size() != s.y.size()) {
            throw std::invalid_argument("series '" + s.name + "' has " +
                                        std::to_string(s.y.size()) + " points but " +
                                        std::to_string(xs.size()) + " abscissa values");
        }
        for (std::size_t i = 0; i < s.y.size(); ++i) {
            if (!std::isfinite(xs[i]) || !std::isfinite(s.y[i])) {
                throw std::invalid_argument("series '" + s.name + "' has non-finite data");
            }
            if (first) {
                xr.lo = xr.hi = xs[i];
                yr.lo = yr.hi = s.y[i];
                first = false;
            } else {
                xr.expand(xs[i]);
                yr.expand(s.y[i]);
            }
        }
    }
    xr.pad_if_degenerate();
    yr.pad_if_degenerate();

    auto px = [&xr](double v) {
        return kLeft + (v - xr.lo) / xr.span() * (kRight - kLeft);
    };
    auto py = [&yr](double v) {
        return kBottom - (v - yr.lo) / yr.span() * (kBottom - kTop);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           fmt(kWidth, "%.0f") + "\" height=\"" + fmt(kHeight, "%.0f") + "\" viewBox=\"0 0 " +
           fmt(kWidth, "%.0f") + " " + fmt(kHeight, "%.0f") + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt(kWidth, "%.0f") + "\" height=\"" +
           fmt(kHeight, "%.0f") + "\" fill=\"#ffffff\"/>\n";
    svg += "<text x=\"" + fmt((kLeft + kRight) / 2.0) +
           "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">" +
           escape_xml(spec.title) + "</text>\n";

    // Axes.
    svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kBottom) + "\" x2=\"" + fmt(kRight) +
           "\" y2=\"" + fmt(kBottom) + "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kTop) + "\" x2=\"" + fmt(kLeft) +
           "\" y2=\"" + fmt(kBottom) + "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    // Five ticks per axis, evenly spaced over the data range.
    for (int i = 0; i <= 4; ++i) {
        const double frac = static_cast<double>(i) / 4.0;
        const double xv = xr.lo + frac * xr.span();
        const double yv = yr.lo + frac * yr.span();
        const double xp = px(xv);
        const double yp = py(yv);
        svg += "<line x1=\"" + fmt(xp) + "\" y1=\"" + fmt(kBottom) + "\" x2=\"" + fmt(xp) +
               "\" y2=\"" + fmt(kBottom + 5.0) + "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + fmt(xp) + "\" y=\"" + fmt(kBottom + 20.0) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" +
               fmt(xv, "%.4g") + "</text>\n";
        svg += "<line x1=\"" + fmt(kLeft - 5.0) + "\" y1=\"" + fmt(yp) + "\" x2=\"" +
               fmt(kLeft) + "\" y2=\"" + fmt(yp) +
               "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + fmt(kLeft - 9.0) + "\" y=\"" + fmt(yp + 4.0) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" +
               fmt(yv, "%.4g") + "</text>\n";
    }

    // Axis labels.
    svg += "<text x=\"" + fmt((kLeft + kRight) / 2.0) + "\" y=\"" + fmt(kHeight - 10.0) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">" +
           escape_xml(spec.x_label) + "</text>\n";
    svg += "<text x=\"18\" y=\"" + fmt((kTop + kBottom) / 2.0) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 18 " +
           fmt((kTop + kBottom) / 2.0) + ")\">" + escape_xml(spec.y_label) + "</text>\n";

    for (std::size_t s = 0; s < spec.series.size(); ++s) {
        const ChartSeries& series = spec.series[s];
        const std::vector<double>& xs = abscissa_of(spec, series);
        const char* color = kPalette[s % kPaletteSize];
        std::string points;
        points.reserve(series.y.size() * 14);
        for (std::size_t i = 0; i < series.y.size(); ++i) {
            if (i > 0) points += ' ';
            points += fmt(px(xs[i])) + "," + fmt(py(series.y[i]));
        }
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
    }

    // Legend column to the right of the plot area.
    const double legend_x = kRight + 14.0;
    for (std::size_t s = 0; s < spec.series.size(); ++s) {
        const double row_y = kTop + 8.0 + static_cast<double>(s) * 17.0;
        const char* color = kPalette[s % kPaletteSize];
        svg += "<line x1=\"" + fmt(legend_x) + "\" y1=\"" + fmt(row_y) + "\" x2=\"" +
               fmt(legend_x + 18.0) + "\" y2=\"" + fmt(row_y) + "\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + fmt(legend_x + 24.0) + "\" y=\"" + fmt(row_y + 4.0) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" +
               escape_xml(spec.series[s].name) + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace cyclesync
