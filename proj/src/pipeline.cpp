#include "cyclesync/pipeline.hpp"

#include <cmath>
#include <stdexcept>

#include "cyclesync/csv.hpp"
#include "cyclesync/digest.hpp"
#include "cyclesync/fourier.hpp"

namespace cyclesync {

void validate_analysis_config(const AnalysisConfig& cfg) {
    if (!std::isfinite(cfg.band.min_period) || !std::isfinite(cfg.band.max_period) ||
        cfg.band.min_period < 2.0 || !(cfg.band.min_period < cfg.band.max_period)) {
        throw std::invalid_argument("band must satisfy 2 <= min_period < max_period");
    }
    const bool known_level = std::abs(cfg.significance - 0.01) < 1e-12 ||
                             std::abs(cfg.significance - 0.05) < 1e-12 ||
                             std::abs(cfg.significance - 0.10) < 1e-12;
    if (!known_level) {
        throw std::invalid_argument("significance must be 0.01, 0.05, or 0.10");
    }
    if (!(cfg.lock_threshold > 0.0) || !std::isfinite(cfg.lock_threshold)) {
        throw std::invalid_argument("lock threshold must be positive");
    }
    if (!(cfg.lock_fraction > 0.0 && cfg.lock_fraction <= 1.0)) {
        throw std::invalid_argument("lock fraction must lie in (0, 1]");
    }
}

AnalysisReport analyze(const Panel& panel, const AnalysisConfig& cfg) {
    validate_analysis_config(cfg);
    validate_panel(panel);

    AnalysisReport report;
    report.config = cfg;
    report.input_digest = fnv1a64_hex(panel_to_csv(panel));
    report.sector_ids = panel.sector_ids;

    const ReturnPanel rp = log_returns(panel);
    report.return_dates = rp.dates;
    const std::size_t S = rp.sector_ids.size();

    // The Fourier record is the returns grid (N-1 samples); the band must
    // make sense there before any per-sector work starts.
    validate_band(cfg.band, rp.dates.size());

    report.stationarity.resize(S);
    for (std::size_t s = 0; s < S; ++s) {
        StationarityEntry& entry = report.stationarity[s];
        try {
            entry.result = unit_root_test(rp.returns[s], cfg.significance);
            entry.tested = true;
            if (!entry.result.reject_unit_root) {
                report.warnings.push_back("sector '" + rp.sector_ids[s] +
                                          "': unit root not rejected; returns may be "
                                          "nonstationary");
            }
        } catch (const std::invalid_argument& e) {
            entry.tested = false;
            entry.note = e.what();
            report.warnings.push_back("sector '" + rp.sector_ids[s] +
                                      "': unit root test skipped: " + e.what());
        }
    }

    report.analytic.reserve(S);
    report.fits.reserve(S);
    std::vector<std::vector<double>> phases(S);
    std::vector<double> omegas(S);
    for (std::size_t s = 0; s < S; ++s) {
        const FourierDecomposition banded = bandpass(fourier_forward(rp.returns[s]), cfg.band);
        const std::vector<double> x = reconstruct(banded);
        const std::vector<double> y = hilbert(banded);
        report.analytic.push_back(make_analytic(x, y));
        report.fits.push_back(fit_frequency(report.analytic.back().phase_unwrapped, 1.0));
        phases[s] = report.analytic.back().phase_unwrapped;
        omegas[s] = report.fits.back().omega;
    }

    if (S >= 2) {
        report.entrainment = entrainment_spread(report.fits);
    } else {
        report.warnings.push_back("single sector: entrainment spread is not defined");
    }

    report.lock = lock_indicator(phases, omegas, 1.0);
    if (S == 1) {
        report.warnings.push_back("single sector: sigma(t) is identically zero");
    }
    report.lock_summary =
        partial_lock_summary(report.lock, cfg.lock_threshold, cfg.lock_fraction);

    report.shocks = decompose_shocks(report.analytic);
    if (S == 1) {
        report.warnings.push_back("single sector: shock dispersion is not defined");
    }
    return report;
}

}  // namespace cyclesync
