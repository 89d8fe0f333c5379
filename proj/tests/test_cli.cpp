#include <doctest.h>

#include <atomic>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclesync/cli.hpp"
#include "cyclesync/csv.hpp"
#include "cyclesync/pipeline.hpp"
#include "cyclesync/synthgen.hpp"

using namespace cyclesync;
namespace fs = std::filesystem;

namespace {

int run(const std::vector<std::string>& args) {
    std::vector<std::string> store;
    store.emplace_back("cyclesync");
    store.insert(store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(store.size());
    for (const std::string& s : store) argv.push_back(s.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

fs::path fresh_dir(const std::string& tag) {
    static std::atomic<unsigned> counter{0};
    const fs::path p = fs::temp_directory_path() /
                       ("cyclesync_cli_" + tag + "_" + std::to_string(counter++));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("band arguments parse as MIN:MAX months") {
    const BandSpec band = parse_band("24:80");
    CHECK(band.min_period == doctest::Approx(24.0));
    CHECK(band.max_period == doctest::Approx(80.0));
    CHECK(parse_band("18.5:80").min_period == doctest::Approx(18.5));

    CHECK_THROWS_AS((void)parse_band("80:24"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_band("24"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_band(":80"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_band("24:"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_band("24:eighty"), std::invalid_argument);
}

TEST_CASE("kick arguments parse as STEP:DELTA") {
    const CommonKick kick = parse_kick("120:3.5");
    CHECK(kick.step == 120);
    CHECK(kick.delta == doctest::Approx(3.5));
    CHECK(parse_kick("0:-0.5").delta == doctest::Approx(-0.5));

    CHECK_THROWS_AS((void)parse_kick("120"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_kick("x:1"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_kick("-3:1"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_kick("120:abc"), std::invalid_argument);
}

TEST_CASE("the oscillator generator writes a parseable panel and its meta") {
    const fs::path out = fresh_dir("kuramoto");
    const int rc = run({"synth", "kuramoto", "--sectors", "4", "--months", "60",
                        "--seed", "7", "--out", out.string()});
    REQUIRE(rc == 0);

    const Panel panel = parse_panel_csv(slurp(out / "panel.csv"));
    CHECK(panel.sector_ids.size() == 4);
    CHECK(panel.dates.size() == 60);

    const std::string meta = slurp(out / "meta.txt");
    CHECK(meta.find("generator: kuramoto") != std::string::npos);
    CHECK(meta.find("seed: 7") != std::string::npos);
    CHECK(meta.find("rng: mt19937_64") != std::string::npos);
    CHECK(meta.find("panel digest: fnv1a64:") != std::string::npos);
}

TEST_CASE("panel generation is byte identical for one seed") {
    const fs::path a = fresh_dir("kur_a");
    const fs::path b = fresh_dir("kur_b");
    const fs::path c = fresh_dir("kur_c");
    REQUIRE(run({"synth", "kuramoto", "--months", "50", "--seed", "9", "--out",
                 a.string()}) == 0);
    REQUIRE(run({"synth", "kuramoto", "--months", "50", "--seed", "9", "--out",
                 b.string()}) == 0);
    REQUIRE(run({"synth", "kuramoto", "--months", "50", "--seed", "10", "--out",
                 c.string()}) == 0);
    CHECK(slurp(a / "panel.csv") == slurp(b / "panel.csv"));
    CHECK(slurp(a / "panel.csv") != slurp(c / "panel.csv"));
}

TEST_CASE("bad generator arguments fail with a nonzero status") {
    const fs::path out = fresh_dir("kur_bad");
    CHECK(run({"synth", "kuramoto", "--sectors", "0", "--out", out.string()}) != 0);
    CHECK(run({"synth", "kuramoto", "--months", "3", "--out", out.string()}) != 0);
    CHECK(run({"synth", "kuramoto", "--freq-spread", "2.5", "--out", out.string()}) != 0);
    CHECK(run({"synth", "kuramoto", "--months", "50", "--kick", "60:1.0", "--out",
               out.string()}) != 0);
}

TEST_CASE("the moving-sum generator matches the library and repeats") {
    const fs::path a = fresh_dir("slu_a");
    const fs::path b = fresh_dir("slu_b");
    REQUIRE(run({"synth", "slutsky", "--n", "100", "--window", "10", "--seed", "3",
                 "--out", a.string()}) == 0);
    REQUIRE(run({"synth", "slutsky", "--n", "100", "--window", "10", "--seed", "3",
                 "--out", b.string()}) == 0);
    CHECK(slurp(a / "series.csv") == slurp(b / "series.csv"));

    const Table table = parse_table_csv(slurp(a / "series.csv"));
    REQUIRE(table.names == std::vector<std::string>{"value"});
    REQUIRE(table.columns[0].size() == 100);
    const std::vector<double> want = slutsky_series(100, 10, 3);
    for (std::size_t t = 0; t < 100; ++t) {
        CHECK(table.columns[0][t] == doctest::Approx(want[t]).epsilon(1e-12));
    }
}

TEST_CASE("analyze writes the full report and matches the library") {
    const fs::path data = fresh_dir("ana_data");
    REQUIRE(run({"synth", "kuramoto", "--sectors", "5", "--months", "121", "--coupling",
                 "0.4", "--seed", "21", "--out", data.string()}) == 0);
    const std::string panel_path = (data / "panel.csv").string();

    const fs::path out = fresh_dir("ana_out");
    REQUIRE(run({"analyze", "--input", panel_path, "--out", out.string()}) == 0);

    for (const char* name : {"frequencies.csv", "lock.csv", "shocks_common.csv",
                             "shocks_individual.csv", "stationarity.csv", "summary.txt"}) {
        CHECK(fs::exists(out / name));
    }

    const Panel panel = parse_panel_csv(slurp(data / "panel.csv"));
    AnalysisConfig cfg;
    cfg.band = {24.0, 80.0};
    const AnalysisReport report = analyze(panel, cfg);

    const Table freqs = parse_table_csv(slurp(out / "frequencies.csv"));
    REQUIRE(freqs.names ==
            std::vector<std::string>{"sector", "omega", "intercept", "rms_residual"});
    REQUIRE(freqs.columns[0].size() == 5);
    for (std::size_t s = 0; s < 5; ++s) {
        CHECK(freqs.columns[0][s] == doctest::Approx(static_cast<double>(s + 1)));
        CHECK(freqs.columns[1][s] == doctest::Approx(report.fits[s].omega).epsilon(1e-9));
    }

    const Table lock = parse_table_csv(slurp(out / "lock.csv"));
    REQUIRE(lock.columns[0].size() == report.lock.sigma.size());

    const std::string summary = slurp(out / "summary.txt");
    CHECK(summary.find("partial phase locking:") != std::string::npos);
    CHECK(summary.find("input digest: fnv1a64:" + report.input_digest) !=
          std::string::npos);
}

TEST_CASE("analyze accepts alternative pass-bands through --band") {
    const fs::path data = fresh_dir("band_data");
    REQUIRE(run({"synth", "kuramoto", "--sectors", "3", "--months", "121", "--seed", "2",
                 "--out", data.string()}) == 0);
    const std::string panel_path = (data / "panel.csv").string();

    const fs::path narrow = fresh_dir("band_narrow");
    const fs::path wide = fresh_dir("band_wide");
    CHECK(run({"analyze", "--input", panel_path, "--band", "24:80", "--out",
               narrow.string()}) == 0);
    CHECK(run({"analyze", "--input", panel_path, "--band", "18:80", "--out",
               wide.string()}) == 0);
    CHECK(parse_table_csv(slurp(narrow / "frequencies.csv")).columns[0].size() == 3);
    CHECK(parse_table_csv(slurp(wide / "frequencies.csv")).columns[0].size() == 3);

    const fs::path bad = fresh_dir("band_bad");
    CHECK(run({"analyze", "--input", panel_path, "--band", "80:24", "--out",
               bad.string()}) != 0);
}

TEST_CASE("the svg flag adds the chart set") {
    const fs::path data = fresh_dir("svg_data");
    REQUIRE(run({"synth", "kuramoto", "--sectors", "3", "--months", "121", "--seed", "4",
                 "--out", data.string()}) == 0);

    const fs::path out = fresh_dir("svg_out");
    REQUIRE(run({"analyze", "--input", (data / "panel.csv").string(), "--svg", "--out",
                 out.string()}) == 0);

    for (const char* name :
         {"phase_plane.svg", "phase_time.svg", "omega_by_sector.svg", "sigma_trace.svg",
          "amplitude_trace.svg", "common_shock.svg", "individual_shocks.svg"}) {
        const std::string svg = slurp(out / name);
        CHECK(svg.rfind("<svg ", 0) == 0);
        CHECK(svg.find("</svg>") != std::string::npos);
    }
}

TEST_CASE("usage errors and missing inputs do not crash the driver") {
    const fs::path out = fresh_dir("errs");
    CHECK(run({"analyze", "--out", out.string()}) != 0);
    CHECK(run({"frobnicate"}) != 0);
    CHECK(run({}) != 0);
    CHECK(run({"analyze", "--input", (out / "missing.csv").string(), "--out",
               out.string()}) != 0);
}
