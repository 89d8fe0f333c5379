#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace cyclesync {

/// Deterministic random source with a fixed cross-platform mapping from seed
/// to output stream.
///
/// std::mt19937_64 itself is pinned by the standard, but the distribution
/// adaptors (std::uniform_real_distribution, std::normal_distribution) are
/// implementation-defined, so this class supplies its own:
///   uniform01: top 53 bits of the raw draw scaled by 2^-53, giving values
///              in [0, 1) on every platform,
///   normal:    Box-Muller on two uniform draws, with the spare variate
///              cached so consecutive calls consume exactly one pair.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform draw in [0, 1).
    [[nodiscard]] double uniform01();

    /// Standard normal draw (mean 0, variance 1).
    [[nodiscard]] double normal();

    /// Identifier of the seed-to-stream mapping, recorded in run summaries so
    /// outputs can be tied to the exact generator that produced them.
    [[nodiscard]] static std::string identity() {
        return "mt19937_64/53-bit-uniform/box-muller";
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace cyclesync
