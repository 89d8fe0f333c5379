#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cyclesync/preprocess.hpp"
#include "cyclesync/rng.hpp"
#include "cyclesync/synthgen.hpp"

using namespace cyclesync;

namespace {

Panel panel_from_levels(std::vector<double> levels) {
    Panel panel;
    panel.sector_ids = {"s1"};
    panel.dates.resize(levels.size());
    panel.dates[0] = {1988, 1};
    for (std::size_t t = 1; t < levels.size(); ++t) {
        panel.dates[t] = panel.dates[t - 1].next();
    }
    panel.levels.push_back(std::move(levels));
    return panel;
}

}  // namespace

TEST_CASE("constant levels give zero returns") {
    const ReturnPanel rp = log_returns(panel_from_levels({100.0, 100.0, 100.0, 100.0}));
    REQUIRE(rp.returns[0].size() == 3);
    for (double r : rp.returns[0]) CHECK(r == 0.0);
}

TEST_CASE("doubling levels give log-two returns") {
    const ReturnPanel rp = log_returns(panel_from_levels({1.0, 2.0, 4.0, 8.0}));
    for (double r : rp.returns[0]) CHECK(r == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("exponential growth rates are recovered exactly") {
    const ReturnPanel rp = log_returns(
        panel_from_levels({100.0, 100.0 * std::exp(0.01), 100.0 * std::exp(0.03),
                           100.0 * std::exp(0.06)}));
    CHECK(rp.returns[0][0] == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(rp.returns[0][1] == doctest::Approx(0.02).epsilon(1e-12));
    CHECK(rp.returns[0][2] == doctest::Approx(0.03).epsilon(1e-12));
}

TEST_CASE("return dates carry the later month of each pair") {
    const ReturnPanel rp = log_returns(panel_from_levels({1.0, 2.0, 4.0, 8.0}));
    REQUIRE(rp.dates.size() == 3);
    CHECK(rp.dates[0].str() == "1988-02");
    CHECK(rp.dates[2].str() == "1988-04");
}

TEST_CASE("log returns invert levels_from_returns") {
    Rng rng(5);
    std::vector<double> r(60);
    for (double& v : r) v = (rng.uniform01() - 0.5) * 0.2;
    const Panel panel = panel_from_levels(levels_from_returns(r, 100.0));
    const ReturnPanel rp = log_returns(panel);
    REQUIRE(rp.returns[0].size() == r.size());
    for (std::size_t t = 0; t < r.size(); ++t) {
        CHECK(rp.returns[0][t] == doctest::Approx(r[t]).epsilon(1e-12));
    }
}

TEST_CASE("unit root test rejects white noise and reports the 5% critical value") {
    Rng rng(17);
    std::vector<double> noise(240);
    for (double& v : noise) v = rng.normal();
    const UnitRootResult res = unit_root_test(noise, 0.05);
    CHECK(res.critical_value == doctest::Approx(-2.86));
    CHECK(res.significance == doctest::Approx(0.05));
    // An iid series mean-reverts maximally; the t-ratio lands far below any
    // critical value.
    CHECK(res.statistic < -10.0);
    CHECK(res.reject_unit_root);
    CHECK(res.reject_unit_root == (res.statistic < res.critical_value));
}

TEST_CASE("critical values follow the significance level") {
    Rng rng(23);
    std::vector<double> noise(100);
    for (double& v : noise) v = rng.normal();
    CHECK(unit_root_test(noise, 0.01).critical_value == doctest::Approx(-3.43));
    CHECK(unit_root_test(noise, 0.05).critical_value == doctest::Approx(-2.86));
    CHECK(unit_root_test(noise, 0.10).critical_value == doctest::Approx(-2.57));
    CHECK_THROWS_AS((void)unit_root_test(noise, 0.07), std::invalid_argument);
}

TEST_CASE("unit root statistic ignores a constant shift") {
    Rng rng(31);
    std::vector<double> x(240);
    double walk = 0.0;
    for (double& v : x) {
        walk += rng.normal();
        v = walk;
    }
    std::vector<double> shifted(x);
    for (double& v : shifted) v += 1000.0;
    const double a = unit_root_test(x, 0.05).statistic;
    const double b = unit_root_test(shifted, 0.05).statistic;
    CHECK(a == doctest::Approx(b).epsilon(1e-9));
}

TEST_CASE("unit root test rejects degenerate inputs") {
    SUBCASE("too short") {
        std::vector<double> x(24, 0.0);
        CHECK_THROWS_AS((void)unit_root_test(x, 0.05), std::invalid_argument);
    }
    SUBCASE("zero variance") {
        std::vector<double> x(30, 5.0);
        CHECK_THROWS_AS((void)unit_root_test(x, 0.05), std::invalid_argument);
    }
    SUBCASE("deterministic linear trend has zero residual") {
        std::vector<double> x(30);
        std::iota(x.begin(), x.end(), 1.0);
        CHECK_THROWS_AS((void)unit_root_test(x, 0.05), std::invalid_argument);
    }
}
