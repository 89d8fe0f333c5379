#pragma once

#include <span>
#include <vector>

namespace cyclesync {

/// Analytic-signal view of one filtered series: z(t) = x(t) + i y(t) with
/// instantaneous amplitude A(t) = |z| and phase theta(t) = arg z.
struct AnalyticSeries {
    std::vector<double> x;                // filtered real series
    std::vector<double> y;                // quadrature (Hilbert) partner
    std::vector<double> amplitude;        // >= 0
    std::vector<double> phase_wrapped;    // in (-pi, pi]
    std::vector<double> phase_unwrapped;  // continuous
};

/// Combine a filtered series with its quadrature partner. Amplitude is
/// sqrt(x^2 + y^2); wrapped phase is the four-quadrant arctangent of (y, x)
/// mapped onto (-pi, pi]; unwrapped phase follows unwrap_phase.
///
/// A sample with x = y = 0 has no defined phase: the previous sample's
/// phase is carried forward, and a zero first sample is an error.
[[nodiscard]] AnalyticSeries make_analytic(std::span<const double> x,
                                           std::span<const double> y);

/// Adjust successive differences by multiples of 2 pi so every step lies in
/// (-pi, pi]; the first sample is unchanged. Inputs must lie in (-pi, pi].
[[nodiscard]] std::vector<double> unwrap_phase(std::span<const double> wrapped);

}  // namespace cyclesync
