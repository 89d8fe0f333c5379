#include "cyclesync/synthgen.hpp"

#include <cmath>
#include <stdexcept>

#include "cyclesync/rng.hpp"

namespace cyclesync {

void validate_kuramoto_config(const KuramotoConfig& cfg) {
    const std::size_t S = cfg.n_oscillators;
    if (S < 1) throw std::invalid_argument("need at least one oscillator");
    if (cfg.natural_frequencies.size() != S) {
        throw std::invalid_argument("expected " + std::to_string(S) +
                                    " natural frequencies, got " +
                                    std::to_string(cfg.natural_frequencies.size()));
    }
    if (cfg.noise_std.size() != S) {
        throw std::invalid_argument("expected " + std::to_string(S) + " noise levels, got " +
                                    std::to_string(cfg.noise_std.size()));
    }
    if (!cfg.initial_phases.empty() && cfg.initial_phases.size() != S) {
        throw std::invalid_argument("initial phases must be empty or one per oscillator");
    }
    if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
        throw std::invalid_argument("dt must be positive and finite");
    }
    if (!(cfg.coupling >= 0.0) || !std::isfinite(cfg.coupling)) {
        throw std::invalid_argument("coupling must be nonnegative and finite");
    }
    double omega_max = 0.0;
    for (double w : cfg.natural_frequencies) {
        if (!std::isfinite(w)) throw std::invalid_argument("natural frequencies must be finite");
        omega_max = std::max(omega_max, std::abs(w));
    }
    if (!(omega_max * cfg.dt < 0.5)) {
        throw std::invalid_argument(
            "step too coarse: max|omega| * dt must stay below 0.5 rad per step");
    }
    for (double s : cfg.noise_std) {
        if (!std::isfinite(s) || s < 0.0) {
            throw std::invalid_argument("noise levels must be nonnegative and finite");
        }
    }
    for (double p : cfg.initial_phases) {
        if (!std::isfinite(p)) throw std::invalid_argument("initial phases must be finite");
    }
    if (cfg.n_steps < 2) {
        throw std::invalid_argument("need at least 2 steps (the panel needs 4 rows)");
    }
    for (const CommonKick& kick : cfg.common_kicks) {
        if (kick.step > cfg.n_steps) {
            throw std::invalid_argument("kick at step " + std::to_string(kick.step) +
                                        " is beyond the last step " +
                                        std::to_string(cfg.n_steps));
        }
        if (!std::isfinite(kick.delta)) throw std::invalid_argument("kick delta must be finite");
    }
    if (cfg.start.month < 1 || cfg.start.month > 12) {
        throw std::invalid_argument("start month must lie in 1..12");
    }
}

KuramotoResult kuramoto_panel(const KuramotoConfig& cfg) {
    validate_kuramoto_config(cfg);
    const std::size_t S = cfg.n_oscillators;
    const std::size_t n_samples = cfg.n_steps + 1;
    const double sqrt_dt = std::sqrt(cfg.dt);

    std::vector<std::vector<double>> phases(S, std::vector<double>(n_samples, 0.0));
    for (std::size_t i = 0; i < S; ++i) {
        phases[i][0] = cfg.initial_phases.empty() ? 0.0 : cfg.initial_phases[i];
    }
    auto apply_kicks = [&cfg, &phases, S](std::size_t step) {
        for (const CommonKick& kick : cfg.common_kicks) {
            if (kick.step == step) {
                for (std::size_t i = 0; i < S; ++i) phases[i][step] += kick.delta;
            }
        }
    };
    apply_kicks(0);

    Rng rng(cfg.seed);
    std::vector<double> drift(S);
    for (std::size_t k = 1; k <= cfg.n_steps; ++k) {
        for (std::size_t i = 0; i < S; ++i) {
            double coupling_sum = 0.0;
            for (std::size_t j = 0; j < S; ++j) {
                coupling_sum += std::sin(phases[j][k - 1] - phases[i][k - 1]);
            }
            drift[i] = cfg.natural_frequencies[i] +
                       cfg.coupling / static_cast<double>(S) * coupling_sum;
        }
        // One normal per oscillator per step, drawn unconditionally so the
        // stream does not depend on which noise levels happen to be zero.
        for (std::size_t i = 0; i < S; ++i) {
            const double xi = rng.normal();
            phases[i][k] = phases[i][k - 1] + drift[i] * cfg.dt +
                           cfg.noise_std[i] * sqrt_dt * xi;
        }
        apply_kicks(k);
    }

    KuramotoResult result;
    result.panel.sector_ids.reserve(S);
    result.panel.levels.reserve(S);
    for (std::size_t i = 0; i < S; ++i) {
        result.panel.sector_ids.push_back("s" + std::to_string(i + 1));
        std::vector<double> returns(n_samples);
        for (std::size_t k = 0; k < n_samples; ++k) returns[k] = std::cos(phases[i][k]);
        result.panel.levels.push_back(levels_from_returns(returns, 100.0));
    }
    result.panel.dates.resize(n_samples + 1);
    result.panel.dates[0] = cfg.start;
    for (std::size_t t = 1; t < result.panel.dates.size(); ++t) {
        result.panel.dates[t] = result.panel.dates[t - 1].next();
    }
    result.phases = std::move(phases);
    return result;
}

double order_parameter(std::span<const double> phases) {
    if (phases.empty()) throw std::invalid_argument("order parameter needs phases");
    double c = 0.0;
    double s = 0.0;
    for (double p : phases) {
        c += std::cos(p);
        s += std::sin(p);
    }
    const double n = static_cast<double>(phases.size());
    return std::hypot(c / n, s / n);
}

std::vector<double> slutsky_series(std::size_t n, std::size_t window, std::uint64_t seed) {
    if (window < 1) throw std::invalid_argument("window must be at least 1");
    if (n < window) throw std::invalid_argument("need n >= window");

    Rng rng(seed);
    std::vector<double> draws(n + window - 1);
    for (double& d : draws) d = rng.uniform01();

    // Direct summation of nonnegative draws keeps every output in [0, window].
    std::vector<double> out(n, 0.0);
    for (std::size_t t = 0; t < n; ++t) {
        double sum = 0.0;
        for (std::size_t j = 0; j < window; ++j) sum += draws[t + j];
        out[t] = sum;
    }
    return out;
}

std::vector<double> solow_residual(std::span<const double> dY, std::span<const double> dK,
                                   std::span<const double> dL, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("capital share alpha must lie in [0, 1]");
    }
    if (dY.size() != dK.size() || dY.size() != dL.size()) {
        throw std::invalid_argument("growth-rate series lengths differ");
    }
    std::vector<double> out(dY.size());
    for (std::size_t t = 0; t < dY.size(); ++t) {
        out[t] = dY[t] - alpha * dK[t] - (1.0 - alpha) * dL[t];
    }
    return out;
}

std::vector<double> levels_from_returns(std::span<const double> returns, double initial_level) {
    if (!(initial_level > 0.0) || !std::isfinite(initial_level)) {
        throw std::invalid_argument("initial level must be positive and finite");
    }
    std::vector<double> out(returns.size() + 1);
    out[0] = initial_level;
    for (std::size_t t = 0; t < returns.size(); ++t) {
        if (!std::isfinite(returns[t])) {
            throw std::invalid_argument("returns must be finite");
        }
        out[t + 1] = out[t] * std::exp(returns[t]);
    }
    return out;
}

}  // namespace cyclesync
