#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cyclesync/analytic.hpp"
#include "cyclesync/rng.hpp"
#include "cyclesync/shocks.hpp"

using namespace cyclesync;

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

AnalyticSeries polar_series(const std::vector<double>& phase,
                            const std::vector<double>& amplitude) {
    std::vector<double> x(phase.size());
    std::vector<double> y(phase.size());
    for (std::size_t t = 0; t < phase.size(); ++t) {
        x[t] = amplitude[t] * std::cos(phase[t]);
        y[t] = amplitude[t] * std::sin(phase[t]);
    }
    return make_analytic(x, y);
}

AnalyticSeries rotating_series(std::size_t n, double omega, double offset,
                               double amplitude) {
    std::vector<double> phase(n);
    for (std::size_t t = 0; t < n; ++t) {
        phase[t] = omega * static_cast<double>(t) + offset;
    }
    return polar_series(phase, std::vector<double>(n, amplitude));
}

}  // namespace

TEST_CASE("unit circles have unit mean amplitude") {
    const std::vector<AnalyticSeries> sectors = {rotating_series(50, 0.2, 0.0, 1.0),
                                                 rotating_series(50, 0.3, 1.0, 1.0)};
    for (double a : mean_amplitude(sectors)) {
        CHECK(a == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("mean amplitude averages the sector moduli") {
    const std::vector<AnalyticSeries> sectors = {rotating_series(30, 0.2, 0.0, 1.0),
                                                 rotating_series(30, 0.2, 0.0, 3.0)};
    for (double a : mean_amplitude(sectors)) {
        CHECK(a == doctest::Approx(2.0).epsilon(1e-12));
    }
}

TEST_CASE("mean amplitude recovers a time-varying envelope") {
    Rng rng(5);
    const std::size_t n = 64;
    std::vector<double> phase(n);
    std::vector<double> env(n);
    for (std::size_t t = 0; t < n; ++t) {
        phase[t] = 0.25 * static_cast<double>(t) + 0.1 * rng.normal();
        env[t] = 1.5 + std::sin(kTau * static_cast<double>(t) / 32.0);
    }
    const std::vector<AnalyticSeries> sectors = {polar_series(phase, env)};
    const std::vector<double> got = mean_amplitude(sectors);
    for (std::size_t t = 0; t < n; ++t) {
        CHECK(got[t] == doctest::Approx(env[t]).epsilon(1e-9));
    }
}

TEST_CASE("in-phase sectors share the common wave") {
    const double omega = kTau / 40.0;
    const std::vector<AnalyticSeries> sectors = {rotating_series(80, omega, 0.0, 1.0),
                                                 rotating_series(80, omega, 0.0, 2.5)};
    const std::vector<double> c = common_shock(sectors);
    for (std::size_t t = 0; t < c.size(); ++t) {
        CHECK(c[t] == doctest::Approx(std::cos(omega * static_cast<double>(t)))
                          .epsilon(1e-12));
    }
}

TEST_CASE("an antiphase pair cancels to zero common shock") {
    const std::vector<AnalyticSeries> sectors = {
        rotating_series(60, 0.2, 0.0, 1.0),
        rotating_series(60, 0.2, std::numbers::pi, 1.0)};
    for (double c : common_shock(sectors)) CHECK(std::abs(c) < 1e-12);
}

TEST_CASE("phases spread evenly around the circle average out") {
    const std::size_t S = 8;
    std::vector<AnalyticSeries> sectors;
    for (std::size_t s = 0; s < S; ++s) {
        sectors.push_back(
            rotating_series(40, 0.17, kTau * static_cast<double>(s) / S, 1.0));
    }
    for (double c : common_shock(sectors)) CHECK(std::abs(c) < 1e-12);
}

TEST_CASE("the common shock is bounded by one in modulus") {
    Rng rng(31);
    std::vector<AnalyticSeries> sectors;
    for (int s = 0; s < 5; ++s) {
        std::vector<double> phase(70);
        std::vector<double> env(70);
        for (std::size_t t = 0; t < phase.size(); ++t) {
            phase[t] = 3.0 * rng.normal();
            env[t] = 0.5 + rng.uniform01();
        }
        sectors.push_back(polar_series(phase, env));
    }
    for (double c : common_shock(sectors)) CHECK(std::abs(c) <= 1.0 + 1e-12);
}

TEST_CASE("synchronized sectors have no individual shocks") {
    const std::vector<AnalyticSeries> sectors = {rotating_series(50, 0.2, 0.4, 1.0),
                                                 rotating_series(50, 0.2, 0.4, 2.0)};
    const ShockDecomposition dec = decompose_shocks(sectors);
    for (const std::vector<double>& row : dec.individual) {
        for (double v : row) CHECK(std::abs(v) < 1e-12);
    }
    for (double d : dec.dispersion) CHECK(std::abs(d) < 1e-12);
}

TEST_CASE("a hand-built pair splits into common and individual parts") {
    // cos theta = 0.8 and 0.2: common 0.5, deviations +-0.3.
    const std::size_t n = 20;
    std::vector<double> x1(n, 0.8), y1(n, 0.6);
    std::vector<double> x2(n, 0.2), y2(n, std::sqrt(1.0 - 0.2 * 0.2));
    const std::vector<AnalyticSeries> sectors = {make_analytic(x1, y1),
                                                 make_analytic(x2, y2)};
    const ShockDecomposition dec = decompose_shocks(sectors);
    for (std::size_t t = 0; t < n; ++t) {
        CHECK(dec.common_shock[t] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(dec.individual[0][t] == doctest::Approx(0.3).epsilon(1e-12));
        CHECK(dec.individual[1][t] == doctest::Approx(-0.3).epsilon(1e-12));
        CHECK(dec.dispersion[t] == doctest::Approx(0.3).epsilon(1e-12));
    }
}

TEST_CASE("individual shocks always sum to zero across sectors") {
    Rng rng(9);
    std::vector<AnalyticSeries> sectors;
    for (int s = 0; s < 7; ++s) {
        std::vector<double> phase(45);
        for (double& p : phase) p = 4.0 * rng.normal();
        sectors.push_back(polar_series(phase, std::vector<double>(45, 1.0)));
    }
    const ShockDecomposition dec = decompose_shocks(sectors);
    for (std::size_t t = 0; t < 45; ++t) {
        double sum = 0.0;
        for (const std::vector<double>& row : dec.individual) sum += row[t];
        CHECK(std::abs(sum) < 1e-12);
    }
}

TEST_CASE("common plus individual reconstructs each sector's cosine") {
    Rng rng(13);
    std::vector<AnalyticSeries> sectors;
    for (int s = 0; s < 4; ++s) {
        std::vector<double> phase(30);
        std::vector<double> env(30);
        for (std::size_t t = 0; t < phase.size(); ++t) {
            phase[t] = 5.0 * (rng.uniform01() - 0.5);
            env[t] = 0.5 + 2.0 * rng.uniform01();
        }
        sectors.push_back(polar_series(phase, env));
    }
    const ShockDecomposition dec = decompose_shocks(sectors);
    for (std::size_t s = 0; s < sectors.size(); ++s) {
        for (std::size_t t = 0; t < 30; ++t) {
            const double want = std::cos(sectors[s].phase_wrapped[t]);
            CHECK(dec.common_shock[t] + dec.individual[s][t] ==
                  doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("scaling the signals scales amplitude but not the phase split") {
    Rng rng(21);
    std::vector<double> phase(40);
    std::vector<double> env(40);
    for (std::size_t t = 0; t < phase.size(); ++t) {
        phase[t] = 2.0 * rng.normal();
        env[t] = 1.0 + rng.uniform01();
    }
    const std::vector<AnalyticSeries> base = {polar_series(phase, env),
                                              rotating_series(40, 0.2, 0.0, 1.0)};
    std::vector<double> scaled_env(env);
    for (double& e : scaled_env) e *= 7.0;
    const std::vector<AnalyticSeries> scaled = {polar_series(phase, scaled_env),
                                                rotating_series(40, 0.2, 0.0, 1.0)};
    const ShockDecomposition a = decompose_shocks(base);
    const ShockDecomposition b = decompose_shocks(scaled);
    for (std::size_t t = 0; t < 40; ++t) {
        CHECK(b.mean_amplitude[t] ==
              doctest::Approx((7.0 * env[t] + 1.0) / 2.0).epsilon(1e-12));
        CHECK(b.common_shock[t] == doctest::Approx(a.common_shock[t]).epsilon(1e-12));
        CHECK(b.dispersion[t] == doctest::Approx(a.dispersion[t]).epsilon(1e-12));
    }
}

TEST_CASE("a single sector decomposes without a dispersion trace") {
    const std::vector<AnalyticSeries> sectors = {rotating_series(25, 0.3, 0.0, 1.0)};
    const ShockDecomposition dec = decompose_shocks(sectors);
    CHECK(dec.times.size() == 25);
    CHECK(dec.times.front() == doctest::Approx(0.0));
    CHECK(dec.times.back() == doctest::Approx(24.0));
    CHECK(dec.individual.size() == 1);
    CHECK(dec.dispersion.empty());
    for (std::size_t t = 0; t < 25; ++t) {
        CHECK(dec.individual[0][t] == doctest::Approx(0.0));
    }
}

TEST_CASE("degenerate shock inputs are rejected") {
    CHECK_THROWS_AS((void)decompose_shocks(std::vector<AnalyticSeries>{}),
                    std::invalid_argument);

    std::vector<AnalyticSeries> ragged = {rotating_series(20, 0.2, 0.0, 1.0),
                                          rotating_series(21, 0.2, 0.0, 1.0)};
    CHECK_THROWS_AS((void)decompose_shocks(ragged), std::invalid_argument);

    const std::vector<AnalyticSeries> pair = {rotating_series(20, 0.2, 0.0, 1.0),
                                              rotating_series(20, 0.2, 0.0, 1.0)};
    const std::vector<double> short_common(19, 0.0);
    CHECK_THROWS_AS((void)individual_shocks(pair, short_common), std::invalid_argument);
    CHECK_THROWS_AS((void)shock_dispersion({{0.0, 0.0}}), std::invalid_argument);
}
