#include "cyclesync/rng.hpp"

#include <cmath>
#include <numbers>

namespace cyclesync {

double Rng::uniform01() {
    // Top 53 bits of the raw draw; exact dyadic rationals in [0, 1).
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller; u is nudged away from 0 so the log stays finite.
    double u = uniform01();
    if (u <= 0.0) u = 0x1.0p-53;
    const double v = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u));
    const double angle = 2.0 * std::numbers::pi * v;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

}  // namespace cyclesync
