#pragma once

#include <span>
#include <vector>

#include "cyclesync/analytic.hpp"

namespace cyclesync {

/// Common/individual decomposition of a panel of analytic series.
///
/// common_shock(t) is the cross-sector mean of cos theta_i(t); individual
/// shocks are the per-sector deviations cos theta_i(t) - common_shock(t),
/// whose cross-sector mean vanishes identically; dispersion is their
/// per-sample population standard deviation.
struct ShockDecomposition {
    std::vector<double> times;
    std::vector<double> mean_amplitude;            // index-return units
    std::vector<double> common_shock;              // in [-1, 1]
    std::vector<std::vector<double>> individual;   // S x T
    std::vector<double> dispersion;                // >= 0 (empty for S < 2)
};

/// Pointwise cross-sector mean of the amplitude modulus sqrt(x^2 + y^2).
/// (Algebraically x_i / cos theta_i wherever that expression is defined,
/// but finite everywhere.)
[[nodiscard]] std::vector<double> mean_amplitude(std::span<const AnalyticSeries> sectors);

/// Pointwise cross-sector mean of cos of the wrapped phase.
[[nodiscard]] std::vector<double> common_shock(std::span<const AnalyticSeries> sectors);

/// Per-sector cos theta_i(t) - common(t); `common` must come from the same
/// panel (lengths are checked).
[[nodiscard]] std::vector<std::vector<double>> individual_shocks(
    std::span<const AnalyticSeries> sectors, std::span<const double> common);

/// Per-sample population (1/S) standard deviation across sectors.
/// Requires at least two sectors.
[[nodiscard]] std::vector<double> shock_dispersion(
    const std::vector<std::vector<double>>& individual);

/// Run the full decomposition. For a single sector the dispersion trace is
/// left empty (degenerate; reported with a warning by the pipeline).
[[nodiscard]] ShockDecomposition decompose_shocks(std::span<const AnalyticSeries> sectors);

}  // namespace cyclesync
