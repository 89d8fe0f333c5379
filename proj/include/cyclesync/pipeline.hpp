#pragma once

#include <string>
#include <vector>

#include "cyclesync/analytic.hpp"
#include "cyclesync/panel.hpp"
#include "cyclesync/preprocess.hpp"
#include "cyclesync/shocks.hpp"
#include "cyclesync/synchrony.hpp"

namespace cyclesync {

/// Knobs of the end-to-end analysis.
struct AnalysisConfig {
    BandSpec band{};                // period pass-band, months
    double significance = 0.05;     // unit-root test level
    double lock_threshold = 0.1;    // lock_ratio cutoff
    double lock_fraction = 0.9;     // samples below cutoff needed to call lock
};

/// Throws std::invalid_argument when a field is outside its range
/// (band ends, significance not one of the tabulated levels, threshold or
/// fraction outside (0, 1]).
void validate_analysis_config(const AnalysisConfig& cfg);

/// Unit-root result per sector, with a flag for sectors the test could not
/// be run on (too short or constant returns); `note` says why.
struct StationarityEntry {
    bool tested = false;
    UnitRootResult result{};
    std::string note;
};

/// Everything analyze() produces. Per-sector vectors are in panel column
/// order. `entrainment` is meaningful only when at least two sectors were
/// analyzed; degenerate cases are flagged in `warnings`.
struct AnalysisReport {
    std::vector<std::string> sector_ids;
    std::vector<YearMonth> return_dates;       // N-1 months
    std::vector<StationarityEntry> stationarity;
    std::vector<AnalyticSeries> analytic;      // band-passed, per sector
    std::vector<FrequencyFit> fits;
    EntrainmentSummary entrainment{};
    LockTrace lock;
    PartialLockSummary lock_summary{};
    ShockDecomposition shocks;
    std::vector<std::string> warnings;
    std::string input_digest;                  // fnv1a-64 of the canonical CSV
    AnalysisConfig config{};
};

/// Run the full chain: log returns, unit-root screen, Fourier band-pass,
/// quadrature series, phase extraction, frequency fits, lock indicator,
/// shock decomposition. The record length for the Fourier stage is N-1
/// (the returns length), so the band must be valid against N-1.
///
/// Deterministic: identical input bytes and config give identical reports.
/// Component errors propagate as the component's exception.
[[nodiscard]] AnalysisReport analyze(const Panel& panel, const AnalysisConfig& cfg);

}  // namespace cyclesync
