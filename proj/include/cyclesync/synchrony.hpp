#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cyclesync {

/// Least-squares line through an unwrapped phase series:
/// theta(t) ~ omega * t + intercept, t in months.
struct FrequencyFit {
    double omega = 0.0;         // rad/month
    double intercept = 0.0;     // rad
    double rms_residual = 0.0;  // rad
};

/// OLS fit over t_k = k * dt_months. Requires length >= 3 and dt > 0.
[[nodiscard]] FrequencyFit fit_frequency(std::span<const double> phase_unwrapped,
                                         double dt_months);

/// Cross-sector summary of fitted angular frequencies.
struct EntrainmentSummary {
    double mean_omega = 0.0;
    double std_omega = 0.0;       // population (1/S)
    double relative_spread = 0.0; // (max - min) / mean
};

/// Requires at least two fits and a nonzero mean frequency.
[[nodiscard]] EntrainmentSummary entrainment_spread(std::span<const FrequencyFit> fits);

/// Discrete d/dt of the de-trended phase r(t) = theta(t) - omega * t:
/// central differences at interior samples, one-sided at the two endpoints.
/// Output length equals input length; requires length >= 3.
[[nodiscard]] std::vector<double> residual_velocity(std::span<const double> phase_unwrapped,
                                                    double omega, double dt_months);

/// Phase-lock indicator traces across a panel of sectors.
///
/// mu(t) is the cross-sector mean of residual phase velocities and sigma(t)
/// the cross-sector root-mean-square deviation from mu(t), both with 1/S
/// normalization; lock_ratio(t) = sigma(t) / mean(omega_i).
struct LockTrace {
    std::vector<double> times;       // months, k * dt
    std::vector<double> mu;          // rad/month
    std::vector<double> sigma;       // rad/month, >= 0
    std::vector<double> lock_ratio;  // dimensionless
};

/// One unwrapped phase series and one fitted omega per sector, all series
/// the same length. sigma is identically zero for a single sector (the
/// degenerate case; the pipeline reports it with a warning).
[[nodiscard]] LockTrace lock_indicator(const std::vector<std::vector<double>>& phases,
                                       std::span<const double> omegas,
                                       double dt_months);

/// Operationalization of "sigma(t) much smaller than omega": the fraction of
/// samples with lock_ratio below `threshold`, locked when that fraction
/// reaches `min_fraction`.
struct PartialLockSummary {
    double fraction_below = 0.0;
    bool is_partially_locked = false;
};

[[nodiscard]] PartialLockSummary partial_lock_summary(const LockTrace& trace,
                                                      double threshold,
                                                      double min_fraction = 0.9);

}  // namespace cyclesync
