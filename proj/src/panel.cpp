#include "cyclesync/panel.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>

namespace cyclesync {

YearMonth YearMonth::next() const {
    if (month == 12) return {year + 1, 1};
    return {year, month + 1};
}

std::string YearMonth::str() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
    return buf;
}

YearMonth parse_year_month(const std::string& text) {
    auto fail = [&text]() -> YearMonth {
        throw std::invalid_argument("bad year-month '" + text + "', expected YYYY-MM");
    };
    if (text.size() != 7 || text[4] != '-') return fail();
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u}) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return fail();
    }
    const int year = (text[0] - '0') * 1000 + (text[1] - '0') * 100 +
                     (text[2] - '0') * 10 + (text[3] - '0');
    const int month = (text[5] - '0') * 10 + (text[6] - '0');
    if (month < 1 || month > 12) return fail();
    return {year, month};
}

namespace {

bool id_ok(const std::string& id) {
    if (id.empty()) return false;
    for (char c : id) {
        if (c == ',' || c == '\n' || c == '\r') return false;
    }
    return true;
}

}  // namespace

void validate_panel(const Panel& panel) {
    const std::size_t S = panel.sector_ids.size();
    const std::size_t N = panel.dates.size();
    if (S < 1) throw std::invalid_argument("panel needs at least one sector");
    if (N < 4) throw std::invalid_argument("panel needs at least 4 monthly samples");
    if (panel.levels.size() != S) {
        throw std::invalid_argument("panel has " + std::to_string(panel.levels.size()) +
                                    " level rows for " + std::to_string(S) + " sectors");
    }

    std::unordered_set<std::string> seen;
    for (std::size_t s = 0; s < S; ++s) {
        const std::string& id = panel.sector_ids[s];
        if (!id_ok(id)) {
            throw std::invalid_argument("sector id " + std::to_string(s + 1) +
                                        " is empty or contains a separator");
        }
        if (!seen.insert(id).second) {
            throw std::invalid_argument("duplicate sector id '" + id + "'");
        }
        if (panel.levels[s].size() != N) {
            throw std::invalid_argument("sector '" + id + "' has " +
                                        std::to_string(panel.levels[s].size()) +
                                        " samples, expected " + std::to_string(N));
        }
        for (std::size_t t = 0; t < N; ++t) {
            const double v = panel.levels[s][t];
            if (!std::isfinite(v) || v <= 0.0) {
                throw std::invalid_argument("sector '" + id + "' at " + panel.dates[t].str() +
                                            ": levels must be finite and positive");
            }
        }
    }

    for (std::size_t t = 0; t < N; ++t) {
        const YearMonth& d = panel.dates[t];
        if (d.month < 1 || d.month > 12) {
            throw std::invalid_argument("date " + std::to_string(t + 1) + " has month " +
                                        std::to_string(d.month));
        }
        if (t > 0 && !(panel.dates[t - 1].next() == d)) {
            throw std::invalid_argument("dates must advance by exactly one month; got " +
                                        panel.dates[t - 1].str() + " then " + d.str());
        }
    }
}

void validate_band(const BandSpec& band, std::size_t n_samples) {
    if (!std::isfinite(band.min_period) || !std::isfinite(band.max_period)) {
        throw std::invalid_argument("band periods must be finite");
    }
    if (band.min_period < 2.0) {
        throw std::invalid_argument("band min_period must be at least 2 months");
    }
    if (!(band.min_period < band.max_period)) {
        throw std::invalid_argument("band min_period must be below max_period");
    }
    if (band.max_period > static_cast<double>(n_samples)) {
        throw std::invalid_argument("band max_period exceeds the record length of " +
                                    std::to_string(n_samples) + " months");
    }
}

}  // namespace cyclesync
