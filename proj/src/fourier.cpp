#include "cyclesync/fourier.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace cyclesync {

namespace {

// cos/sin of 2*pi*k/N for k = 0..N-1. The angle of harmonic n at sample t
// is looked up at index (n*t) mod N, which keeps the O(N^2) projection free
// of per-term trig calls and of large-argument error.
struct TrigTable {
    std::vector<double> cos_v;
    std::vector<double> sin_v;

    explicit TrigTable(std::size_t n) : cos_v(n), sin_v(n) {
        for (std::size_t k = 0; k < n; ++k) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                                 static_cast<double>(n);
            cos_v[k] = std::cos(angle);
            sin_v[k] = std::sin(angle);
        }
    }
};

void check_decomposition(const FourierDecomposition& dec) {
    if (dec.n_samples < 4) throw std::invalid_argument("decomposition needs n_samples >= 4");
    if (dec.cos_coef.size() != dec.n_samples / 2 || dec.sin_coef.size() != dec.cos_coef.size()) {
        throw std::invalid_argument("decomposition has inconsistent coefficient counts");
    }
}

}  // namespace

FourierDecomposition fourier_forward(std::span<const double> series) {
    const std::size_t N = series.size();
    if (N < 4) {
        throw std::invalid_argument("Fourier expansion needs at least 4 samples, got " +
                                    std::to_string(N));
    }
    const std::size_t H = N / 2;
    const TrigTable trig(N);

    FourierDecomposition dec;
    dec.n_samples = N;
    dec.mean_term = std::accumulate(series.begin(), series.end(), 0.0) /
                    static_cast<double>(N);
    dec.cos_coef.assign(H, 0.0);
    dec.sin_coef.assign(H, 0.0);

    const bool even = (N % 2 == 0);
    for (std::size_t n = 1; n <= H; ++n) {
        double ca = 0.0;
        double sa = 0.0;
        for (std::size_t t = 0; t < N; ++t) {
            const std::size_t k = (n * t) % N;
            ca += series[t] * trig.cos_v[k];
            sa += series[t] * trig.sin_v[k];
        }
        if (even && n == H) {
            // Nyquist harmonic: sin(pi*t) vanishes on the grid, and the
            // cosine column has squared norm N (not N/2), so the projection
            // uses weight 1/N and the sine coefficient is exactly zero.
            dec.cos_coef[n - 1] = ca / static_cast<double>(N);
            dec.sin_coef[n - 1] = 0.0;
        } else {
            dec.cos_coef[n - 1] = 2.0 * ca / static_cast<double>(N);
            dec.sin_coef[n - 1] = 2.0 * sa / static_cast<double>(N);
        }
    }
    return dec;
}

std::vector<double> reconstruct(const FourierDecomposition& dec) {
    check_decomposition(dec);
    const std::size_t N = dec.n_samples;
    const TrigTable trig(N);

    std::vector<double> out(N, dec.mean_term);
    for (std::size_t n = 1; n <= dec.n_harmonics(); ++n) {
        const double a = dec.cos_coef[n - 1];
        const double b = dec.sin_coef[n - 1];
        if (a == 0.0 && b == 0.0) continue;
        for (std::size_t t = 0; t < N; ++t) {
            const std::size_t k = (n * t) % N;
            out[t] += a * trig.cos_v[k] + b * trig.sin_v[k];
        }
    }
    return out;
}

FourierDecomposition bandpass(const FourierDecomposition& dec, const BandSpec& band) {
    check_decomposition(dec);
    validate_band(band, dec.n_samples);

    FourierDecomposition out;
    out.n_samples = dec.n_samples;
    out.mean_term = 0.0;
    out.cos_coef.assign(dec.cos_coef.size(), 0.0);
    out.sin_coef.assign(dec.sin_coef.size(), 0.0);

    std::size_t retained = 0;
    for (std::size_t n = 1; n <= dec.n_harmonics(); ++n) {
        const double period = static_cast<double>(dec.n_samples) / static_cast<double>(n);
        if (period >= band.min_period && period <= band.max_period) {
            out.cos_coef[n - 1] = dec.cos_coef[n - 1];
            out.sin_coef[n - 1] = dec.sin_coef[n - 1];
            ++retained;
        }
    }
    if (retained == 0) {
        throw std::invalid_argument("pass-band [" + std::to_string(band.min_period) + ", " +
                                    std::to_string(band.max_period) +
                                    "] months retains no harmonic of a " +
                                    std::to_string(dec.n_samples) + "-sample record");
    }
    return out;
}

std::vector<double> hilbert(const FourierDecomposition& dec) {
    check_decomposition(dec);
    const std::size_t N = dec.n_samples;
    const TrigTable trig(N);

    std::vector<double> out(N, 0.0);
    for (std::size_t n = 1; n <= dec.n_harmonics(); ++n) {
        const double a = dec.cos_coef[n - 1];
        const double b = dec.sin_coef[n - 1];
        if (a == 0.0 && b == 0.0) continue;
        for (std::size_t t = 0; t < N; ++t) {
            const std::size_t k = (n * t) % N;
            out[t] += a * trig.sin_v[k] - b * trig.cos_v[k];
        }
    }
    return out;
}

}  // namespace cyclesync
