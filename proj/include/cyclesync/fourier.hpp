#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cyclesync/panel.hpp"

namespace cyclesync {

/// Discrete Fourier-series decomposition of a real series of length N:
///
///     x(t) = mean_term + sum_n [ a_n cos(2 pi n t / N) + b_n sin(2 pi n t / N) ]
///
/// over harmonics n = 1 .. floor(N/2), with the record length N taken as the
/// fundamental period, so harmonic n has period N/n samples (months).
/// Coefficients are stored as the reconstruction amplitudes above; for even
/// N the Nyquist harmonic n = N/2 carries only a cosine coefficient (its
/// sine vanishes on the sample grid) and enters reconstruction with weight
/// one, which keeps reconstruct(fourier_forward(x)) == x exactly.
struct FourierDecomposition {
    std::size_t n_samples = 0;
    double mean_term = 0.0;
    std::vector<double> cos_coef;  // a_n at index n-1, size floor(N/2)
    std::vector<double> sin_coef;  // b_n at index n-1

    [[nodiscard]] std::size_t n_harmonics() const { return cos_coef.size(); }
};

/// Direct O(N^2) projection onto the harmonic basis. Requires N >= 4.
[[nodiscard]] FourierDecomposition fourier_forward(std::span<const double> series);

/// Evaluate the finite sum at t = 0 .. N-1.
[[nodiscard]] std::vector<double> reconstruct(const FourierDecomposition& dec);

/// Keep exactly the harmonics whose period N/n lies in
/// [band.min_period, band.max_period] (closed on both ends); zero the mean
/// term and everything else. Throws when the band is invalid for N or when
/// no harmonic survives (phase extraction downstream would be meaningless).
[[nodiscard]] FourierDecomposition bandpass(const FourierDecomposition& dec,
                                            const BandSpec& band);

/// Quadrature partner by coefficient rotation:
///
///     y(t) = sum_n [ a_n sin(2 pi n t / N) - b_n cos(2 pi n t / N) ]
///
/// i.e. cos -> sin and sin -> -cos at every harmonic. The mean term maps to
/// zero (the transform of a constant vanishes).
[[nodiscard]] std::vector<double> hilbert(const FourierDecomposition& dec);

}  // namespace cyclesync
