#include "cyclesync/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cyclesync {

namespace {

constexpr double kPi = std::numbers::pi;

// atan2 returns values in [-pi, pi]; the phase domain here is (-pi, pi],
// so an exact -pi (x < 0, y = -0.0) folds to +pi.
double wrapped_atan2(double y, double x) {
    const double phase = std::atan2(y, x);
    if (phase == -kPi) return kPi;
    return phase;
}

}  // namespace

AnalyticSeries make_analytic(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("analytic signal needs equal-length parts, got " +
                                    std::to_string(x.size()) + " and " +
                                    std::to_string(y.size()));
    }
    if (x.empty()) throw std::invalid_argument("analytic signal needs at least one sample");

    AnalyticSeries out;
    out.x.assign(x.begin(), x.end());
    out.y.assign(y.begin(), y.end());
    out.amplitude.resize(x.size());
    out.phase_wrapped.resize(x.size());

    for (std::size_t t = 0; t < x.size(); ++t) {
        if (!std::isfinite(x[t]) || !std::isfinite(y[t])) {
            throw std::invalid_argument("analytic signal input must be finite");
        }
        out.amplitude[t] = std::hypot(x[t], y[t]);
        if (x[t] == 0.0 && y[t] == 0.0) {
            if (t == 0) {
                throw std::invalid_argument(
                    "phase is undefined: the series starts at the origin");
            }
            out.phase_wrapped[t] = out.phase_wrapped[t - 1];
        } else {
            out.phase_wrapped[t] = wrapped_atan2(y[t], x[t]);
        }
    }
    out.phase_unwrapped = unwrap_phase(out.phase_wrapped);
    return out;
}

std::vector<double> unwrap_phase(std::span<const double> wrapped) {
    std::vector<double> out(wrapped.begin(), wrapped.end());
    if (out.empty()) return out;
    if (wrapped[0] <= -kPi || wrapped[0] > kPi) {
        throw std::invalid_argument("wrapped phase must lie in (-pi, pi]");
    }
    double offset = 0.0;
    for (std::size_t t = 1; t < wrapped.size(); ++t) {
        if (wrapped[t] <= -kPi || wrapped[t] > kPi) {
            throw std::invalid_argument("wrapped phase must lie in (-pi, pi]");
        }
        double step = wrapped[t] - wrapped[t - 1];
        while (step > kPi) {
            step -= 2.0 * kPi;
            offset -= 2.0 * kPi;
        }
        while (step <= -kPi) {
            step += 2.0 * kPi;
            offset += 2.0 * kPi;
        }
        out[t] = wrapped[t] + offset;
    }
    return out;
}

}  // namespace cyclesync
