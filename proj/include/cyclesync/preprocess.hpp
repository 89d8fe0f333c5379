#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cyclesync/panel.hpp"

namespace cyclesync {

/// Stationary log-return panel derived from a level Panel. Dates carry the
/// later month of each consecutive pair, so the grid has N-1 samples.
struct ReturnPanel {
    std::vector<std::string> sector_ids;
    std::vector<YearMonth> dates;               // size N-1
    std::vector<std::vector<double>> returns;   // S x (N-1)
};

/// returns[s][t] = ln(levels[s][t+1]) - ln(levels[s][t]).
/// Positivity of levels guarantees finiteness.
[[nodiscard]] ReturnPanel log_returns(const Panel& panel);

/// Outcome of the Dickey-Fuller unit-root test (intercept, no lag
/// augmentation). Rejection of the unit root supports stationarity.
struct UnitRootResult {
    double statistic = 0.0;        // t-ratio of the lagged-level coefficient
    double critical_value = 0.0;   // at the chosen significance
    double significance = 0.05;    // one of 0.01, 0.05, 0.10
    bool reject_unit_root = false;
};

/// Dickey-Fuller t-ratio from the OLS regression
///     dx_t = c + rho * x_{t-1} + e_t,
/// statistic = rho_hat / stderr(rho_hat), compared against the asymptotic
/// intercept-only critical values -3.43 (1%), -2.86 (5%), -2.57 (10%).
///
/// Throws std::invalid_argument when the series is shorter than 25 samples
/// (asymptotic critical values are unreliable below that), when the series
/// has zero variance (regression singular), or when the regression residual
/// is numerically zero (deterministic input).
[[nodiscard]] UnitRootResult unit_root_test(std::span<const double> series,
                                            double significance = 0.05);

}  // namespace cyclesync
