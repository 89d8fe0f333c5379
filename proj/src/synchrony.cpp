#include "cyclesync/synchrony.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cyclesync {

FrequencyFit fit_frequency(std::span<const double> phase_unwrapped, double dt_months) {
    const std::size_t n = phase_unwrapped.size();
    if (n < 3) throw std::invalid_argument("frequency fit needs at least 3 samples");
    if (!(dt_months > 0.0)) throw std::invalid_argument("dt must be positive");

    const double t_mean = dt_months * static_cast<double>(n - 1) / 2.0;
    double p_mean = 0.0;
    for (double p : phase_unwrapped) p_mean += p;
    p_mean /= static_cast<double>(n);

    double stt = 0.0;
    double stp = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double dtk = dt_months * static_cast<double>(k) - t_mean;
        stt += dtk * dtk;
        stp += dtk * (phase_unwrapped[k] - p_mean);
    }

    FrequencyFit fit;
    fit.omega = stp / stt;
    fit.intercept = p_mean - fit.omega * t_mean;

    double rss = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double e = phase_unwrapped[k] -
                         (fit.intercept + fit.omega * dt_months * static_cast<double>(k));
        rss += e * e;
    }
    fit.rms_residual = std::sqrt(rss / static_cast<double>(n));
    return fit;
}

EntrainmentSummary entrainment_spread(std::span<const FrequencyFit> fits) {
    if (fits.size() < 2) throw std::invalid_argument("spread needs at least 2 fitted sectors");

    double mean = 0.0;
    double lo = fits[0].omega;
    double hi = fits[0].omega;
    for (const FrequencyFit& f : fits) {
        mean += f.omega;
        lo = std::min(lo, f.omega);
        hi = std::max(hi, f.omega);
    }
    mean /= static_cast<double>(fits.size());
    if (mean == 0.0) throw std::invalid_argument("mean frequency is zero; spread undefined");

    double var = 0.0;
    for (const FrequencyFit& f : fits) {
        var += (f.omega - mean) * (f.omega - mean);
    }
    var /= static_cast<double>(fits.size());

    EntrainmentSummary out;
    out.mean_omega = mean;
    out.std_omega = std::sqrt(var);
    out.relative_spread = (hi - lo) / mean;
    return out;
}

std::vector<double> residual_velocity(std::span<const double> phase_unwrapped, double omega,
                                      double dt_months) {
    const std::size_t n = phase_unwrapped.size();
    if (n < 3) throw std::invalid_argument("residual velocity needs at least 3 samples");
    if (!(dt_months > 0.0)) throw std::invalid_argument("dt must be positive");

    // De-trended phase r(t_k) = theta(t_k) - omega * t_k.
    std::vector<double> r(n);
    for (std::size_t k = 0; k < n; ++k) {
        r[k] = phase_unwrapped[k] - omega * dt_months * static_cast<double>(k);
    }

    std::vector<double> v(n);
    v[0] = (r[1] - r[0]) / dt_months;
    v[n - 1] = (r[n - 1] - r[n - 2]) / dt_months;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        v[k] = (r[k + 1] - r[k - 1]) / (2.0 * dt_months);
    }
    return v;
}

LockTrace lock_indicator(const std::vector<std::vector<double>>& phases,
                         std::span<const double> omegas, double dt_months) {
    const std::size_t S = phases.size();
    if (S < 1) throw std::invalid_argument("lock indicator needs at least one sector");
    if (omegas.size() != S) {
        throw std::invalid_argument("got " + std::to_string(omegas.size()) + " omegas for " +
                                    std::to_string(S) + " sectors");
    }
    const std::size_t L = phases[0].size();
    for (const std::vector<double>& p : phases) {
        if (p.size() != L) throw std::invalid_argument("phase series lengths differ");
    }

    double omega_mean = 0.0;
    for (double w : omegas) omega_mean += w;
    omega_mean /= static_cast<double>(S);
    if (omega_mean == 0.0) {
        throw std::invalid_argument("mean fitted frequency is zero; lock ratio undefined");
    }

    std::vector<std::vector<double>> velocity(S);
    for (std::size_t s = 0; s < S; ++s) {
        velocity[s] = residual_velocity(phases[s], omegas[s], dt_months);
    }

    LockTrace trace;
    trace.times.resize(L);
    trace.mu.resize(L);
    trace.sigma.resize(L);
    trace.lock_ratio.resize(L);
    for (std::size_t t = 0; t < L; ++t) {
        trace.times[t] = dt_months * static_cast<double>(t);
        double mu = 0.0;
        for (std::size_t s = 0; s < S; ++s) mu += velocity[s][t];
        mu /= static_cast<double>(S);

        double var = 0.0;
        for (std::size_t s = 0; s < S; ++s) {
            var += (velocity[s][t] - mu) * (velocity[s][t] - mu);
        }
        var /= static_cast<double>(S);

        trace.mu[t] = mu;
        trace.sigma[t] = std::sqrt(var);
        trace.lock_ratio[t] = trace.sigma[t] / omega_mean;
    }
    return trace;
}

PartialLockSummary partial_lock_summary(const LockTrace& trace, double threshold,
                                        double min_fraction) {
    if (!(threshold > 0.0)) throw std::invalid_argument("lock threshold must be positive");
    if (!(min_fraction > 0.0 && min_fraction <= 1.0)) {
        throw std::invalid_argument("lock fraction must lie in (0, 1]");
    }
    if (trace.lock_ratio.empty()) throw std::invalid_argument("empty lock trace");

    std::size_t below = 0;
    for (double r : trace.lock_ratio) {
        if (r < threshold) ++below;
    }

    PartialLockSummary out;
    out.fraction_below = static_cast<double>(below) / static_cast<double>(trace.lock_ratio.size());
    out.is_partially_locked = out.fraction_below >= min_fraction;
    return out;
}

}  // namespace cyclesync
