#include "cyclesync/shocks.hpp"

#include <cmath>
#include <stdexcept>

namespace cyclesync {

namespace {

std::size_t common_length(std::span<const AnalyticSeries> sectors) {
    if (sectors.empty()) throw std::invalid_argument("shock decomposition needs sectors");
    const std::size_t L = sectors[0].x.size();
    for (const AnalyticSeries& s : sectors) {
        if (s.x.size() != L || s.phase_wrapped.size() != L || s.amplitude.size() != L) {
            throw std::invalid_argument("sector series lengths differ");
        }
    }
    if (L == 0) throw std::invalid_argument("shock decomposition needs samples");
    return L;
}

}  // namespace

std::vector<double> mean_amplitude(std::span<const AnalyticSeries> sectors) {
    const std::size_t L = common_length(sectors);
    std::vector<double> out(L, 0.0);
    for (const AnalyticSeries& s : sectors) {
        for (std::size_t t = 0; t < L; ++t) out[t] += s.amplitude[t];
    }
    for (double& v : out) v /= static_cast<double>(sectors.size());
    return out;
}

std::vector<double> common_shock(std::span<const AnalyticSeries> sectors) {
    const std::size_t L = common_length(sectors);
    std::vector<double> out(L, 0.0);
    for (const AnalyticSeries& s : sectors) {
        for (std::size_t t = 0; t < L; ++t) out[t] += std::cos(s.phase_wrapped[t]);
    }
    for (double& v : out) v /= static_cast<double>(sectors.size());
    return out;
}

std::vector<std::vector<double>> individual_shocks(std::span<const AnalyticSeries> sectors,
                                                   std::span<const double> common) {
    const std::size_t L = common_length(sectors);
    if (common.size() != L) {
        throw std::invalid_argument("common shock length differs from the panel");
    }
    std::vector<std::vector<double>> out(sectors.size(), std::vector<double>(L));
    for (std::size_t s = 0; s < sectors.size(); ++s) {
        for (std::size_t t = 0; t < L; ++t) {
            out[s][t] = std::cos(sectors[s].phase_wrapped[t]) - common[t];
        }
    }
    return out;
}

std::vector<double> shock_dispersion(const std::vector<std::vector<double>>& individual) {
    const std::size_t S = individual.size();
    if (S < 2) throw std::invalid_argument("dispersion needs at least 2 sectors");
    const std::size_t L = individual[0].size();
    for (const std::vector<double>& row : individual) {
        if (row.size() != L) throw std::invalid_argument("individual shock lengths differ");
    }

    std::vector<double> out(L, 0.0);
    for (std::size_t t = 0; t < L; ++t) {
        double mean = 0.0;
        for (std::size_t s = 0; s < S; ++s) mean += individual[s][t];
        mean /= static_cast<double>(S);
        double var = 0.0;
        for (std::size_t s = 0; s < S; ++s) {
            var += (individual[s][t] - mean) * (individual[s][t] - mean);
        }
        out[t] = std::sqrt(var / static_cast<double>(S));
    }
    return out;
}

ShockDecomposition decompose_shocks(std::span<const AnalyticSeries> sectors) {
    const std::size_t L = common_length(sectors);

    ShockDecomposition dec;
    dec.times.resize(L);
    for (std::size_t t = 0; t < L; ++t) dec.times[t] = static_cast<double>(t);
    dec.mean_amplitude = mean_amplitude(sectors);
    dec.common_shock = common_shock(sectors);
    dec.individual = individual_shocks(sectors, dec.common_shock);
    if (sectors.size() >= 2) {
        dec.dispersion = shock_dispersion(dec.individual);
    }
    return dec;
}

}  // namespace cyclesync
