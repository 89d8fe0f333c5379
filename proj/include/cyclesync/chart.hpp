#pragma once

#include <string>
#include <vector>

namespace cyclesync {

/// One plotted curve. `x` may be left empty to use the chart's shared x
/// grid; a non-empty x (same length as y) overrides it, which is how
/// parametric traces such as phase-plane orbits are drawn.
struct ChartSeries {
    std::string name;
    std::vector<double> x;  // optional per-series abscissa
    std::vector<double> y;
};

/// A complete line chart: axes with tick labels, one polyline per series,
/// and a legend.
struct ChartSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<double> x;            // shared abscissa for series without x
    std::vector<ChartSeries> series;  // at least one
};

/// Render the spec as a standalone SVG 1.1 document. Output is a pure
/// function of the spec: identical specs give byte-identical text. A
/// degenerate axis range (constant data) is padded by one unit on each
/// side. Throws std::invalid_argument on an empty spec, a length mismatch
/// between a series and its abscissa, or non-finite data.
[[nodiscard]] std::string render_svg(const ChartSpec& spec);

}  // namespace cyclesync
