#include "cyclesync/preprocess.hpp"

#include <cmath>
#include <stdexcept>

namespace cyclesync {

ReturnPanel log_returns(const Panel& panel) {
    validate_panel(panel);
    const std::size_t S = panel.n_sectors();
    const std::size_t N = panel.n_samples();

    ReturnPanel out;
    out.sector_ids = panel.sector_ids;
    out.dates.assign(panel.dates.begin() + 1, panel.dates.end());
    out.returns.assign(S, std::vector<double>(N - 1));
    for (std::size_t s = 0; s < S; ++s) {
        for (std::size_t t = 0; t + 1 < N; ++t) {
            out.returns[s][t] = std::log(panel.levels[s][t + 1]) - std::log(panel.levels[s][t]);
        }
    }
    return out;
}

namespace {

// Asymptotic Dickey-Fuller critical values, intercept-only case.
struct CriticalRow {
    double significance;
    double value;
};
constexpr CriticalRow kCriticalValues[] = {
    {0.01, -3.43},
    {0.05, -2.86},
    {0.10, -2.57},
};

double critical_value_at(double significance) {
    for (const CriticalRow& row : kCriticalValues) {
        if (std::abs(significance - row.significance) < 1e-12) return row.value;
    }
    throw std::invalid_argument("significance must be 0.01, 0.05, or 0.10");
}

}  // namespace

UnitRootResult unit_root_test(std::span<const double> series, double significance) {
    const double critical = critical_value_at(significance);
    const std::size_t n = series.size();
    if (n < 25) {
        throw std::invalid_argument("unit root test needs at least 25 samples, got " +
                                    std::to_string(n));
    }

    // Regression dx_t = c + rho * x_{t-1} + e_t over the m = n - 1 pairs.
    const std::size_t m = n - 1;
    double lag_mean = 0.0;
    double diff_mean = 0.0;
    for (std::size_t t = 0; t < m; ++t) {
        lag_mean += series[t];
        diff_mean += series[t + 1] - series[t];
    }
    lag_mean /= static_cast<double>(m);
    diff_mean /= static_cast<double>(m);

    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t t = 0; t < m; ++t) {
        const double dx = series[t] - lag_mean;
        const double dy = (series[t + 1] - series[t]) - diff_mean;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    if (sxx <= 0.0) {
        throw std::invalid_argument("unit root test is singular on a zero-variance series");
    }

    const double rho = sxy / sxx;
    double rss = 0.0;
    for (std::size_t t = 0; t < m; ++t) {
        const double fitted = diff_mean + rho * (series[t] - lag_mean);
        const double e = (series[t + 1] - series[t]) - fitted;
        rss += e * e;
    }
    const double sigma2 = rss / static_cast<double>(m - 2);
    if (!(sigma2 > 0.0)) {
        throw std::invalid_argument("unit root test is degenerate: zero residual variance");
    }

    UnitRootResult result;
    result.statistic = rho / std::sqrt(sigma2 / sxx);
    result.critical_value = critical;
    result.significance = significance;
    result.reject_unit_root = result.statistic < critical;
    return result;
}

}  // namespace cyclesync
