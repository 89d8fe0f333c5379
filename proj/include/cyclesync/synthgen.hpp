#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyclesync/panel.hpp"

namespace cyclesync {

/// Phase offset added to every oscillator when sample `step` is formed
/// (step 0 applies to the initial condition). Because the coupling term
/// depends only on phase differences, a common kick shifts every later
/// sample by exactly `delta` and leaves pairwise differences unchanged.
struct CommonKick {
    std::size_t step = 0;
    double delta = 0.0;  // radians
};

/// Parameters of the mean-field sine-coupled oscillator panel.
///
/// The simulation integrates, per oscillator i,
///   d theta_i = [omega_i + (K/S) sum_j sin(theta_j - theta_i)] dt
///             + noise_std_i * sqrt(dt) * xi
/// with the Euler-Maruyama scheme, recording phases at samples
/// t = 0, dt, ..., n_steps*dt (n_steps updates, n_steps + 1 samples).
///
/// One standard normal is drawn per oscillator per update, in oscillator
/// order, regardless of the noise amplitude, so two configs with the same
/// seed consume identical random streams even if their noise levels differ.
struct KuramotoConfig {
    std::size_t n_oscillators = 16;
    double coupling = 0.0;                     // K, rad/month
    std::vector<double> natural_frequencies;   // size S, rad/month
    std::vector<double> noise_std;             // size S, rad/sqrt(month)
    std::vector<CommonKick> common_kicks;      // steps must be <= n_steps
    std::vector<double> initial_phases;        // size S, or empty for zeros
    double dt = 1.0;                           // months per step
    std::size_t n_steps = 239;                 // Euler updates
    std::uint64_t seed = 1;
    YearMonth start{1988, 1};                  // first month of the panel
};

/// Output of the oscillator simulation: the ground-truth unwrapped phases
/// (S rows of n_steps + 1 samples) and a Panel of synthetic index levels
/// whose log returns equal cos(theta_i(t)) sample for sample. The panel has
/// n_steps + 2 monthly rows starting at cfg.start and base level 100.
struct KuramotoResult {
    std::vector<std::vector<double>> phases;
    Panel panel;
};

/// Throws std::invalid_argument on a bad config: S = 0, wrong-sized
/// frequency/noise/initial vectors, dt <= 0, step-size guard
/// max|omega_i| * dt >= 0.5 rad, kick step beyond n_steps, or n_steps < 2
/// (the emitted panel needs at least four rows).
void validate_kuramoto_config(const KuramotoConfig& cfg);

/// Integrate the panel. Deterministic for a fixed config and seed.
[[nodiscard]] KuramotoResult kuramoto_panel(const KuramotoConfig& cfg);

/// Modulus of the mean unit phasor over one time slice of phases; 1 at full
/// synchrony, near 0 for incoherent phases. Requires at least one phase.
[[nodiscard]] double order_parameter(std::span<const double> phases);

/// Moving sum of `window` consecutive uniform(0,1) draws. Draws
/// n + window - 1 variates; output[t] sums the window ending at t, so the
/// result has length n and every value lies in [0, window].
/// Throws std::invalid_argument unless n >= window >= 1.
[[nodiscard]] std::vector<double> slutsky_series(std::size_t n, std::size_t window,
                                                 std::uint64_t seed);

/// Growth-accounting residual dY - alpha*dK - (1 - alpha)*dL, elementwise.
/// Throws std::invalid_argument if alpha is outside [0,1] or lengths differ.
[[nodiscard]] std::vector<double> solow_residual(std::span<const double> dY,
                                                 std::span<const double> dK,
                                                 std::span<const double> dL, double alpha);

/// Inverse of log_returns: levels[0] = initial_level,
/// levels[t+1] = levels[t] * exp(returns[t]). Output length is
/// returns.size() + 1. Throws std::invalid_argument if initial_level <= 0
/// or any return is not finite.
[[nodiscard]] std::vector<double> levels_from_returns(std::span<const double> returns,
                                                      double initial_level);

}  // namespace cyclesync
