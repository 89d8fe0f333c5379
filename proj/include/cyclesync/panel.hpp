#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cyclesync {

/// Calendar month with year-month resolution. Day/timezone are deliberately
/// out of the data model; the panels this library consumes are monthly.
struct YearMonth {
    int year = 0;
    int month = 0;  // 1..12

    [[nodiscard]] YearMonth next() const;
    [[nodiscard]] std::string str() const;  // "YYYY-MM"

    friend bool operator==(const YearMonth&, const YearMonth&) = default;
};

/// Parse a strict "YYYY-MM" date. Throws std::invalid_argument on anything
/// else (no day component, no whitespace, month 01..12).
[[nodiscard]] YearMonth parse_year_month(const std::string& text);

/// Panel of raw index levels: S sectors observed on a shared monthly grid.
///
/// Levels are stored sector-major (levels[s][t]) because every downstream
/// stage operates on one sector's series at a time.
struct Panel {
    std::vector<std::string> sector_ids;        // size S, unique, non-empty
    std::vector<YearMonth> dates;               // size N, consecutive months
    std::vector<std::vector<double>> levels;    // S x N, all > 0

    [[nodiscard]] std::size_t n_sectors() const { return sector_ids.size(); }
    [[nodiscard]] std::size_t n_samples() const { return dates.size(); }
};

/// Check every Panel invariant: N >= 4, S >= 1, unique separator-free ids,
/// strictly consecutive months, finite positive levels, consistent shape.
/// Throws std::invalid_argument naming the first violation.
void validate_panel(const Panel& panel);

/// Period window, in months, for Fourier truncation.
struct BandSpec {
    double min_period = 24.0;
    double max_period = 80.0;
};

/// A band is valid for a record of n_samples months when
/// 2 <= min_period < max_period <= n_samples.
void validate_band(const BandSpec& band, std::size_t n_samples);

}  // namespace cyclesync
