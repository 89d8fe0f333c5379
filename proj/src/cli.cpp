#include "cyclesync/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclesync/chart.hpp"
#include "cyclesync/csv.hpp"
#include "cyclesync/digest.hpp"
#include "cyclesync/pipeline.hpp"
#include "cyclesync/rng.hpp"

namespace cyclesync {

namespace {

namespace fs = std::filesystem;

// Mean natural period of generated oscillator panels, months. Chosen inside
// the default [24, 80] pass-band so generated panels analyze cleanly.
constexpr double kMeanPeriodMonths = 40.0;

// Keeps the integration noise stream distinct from the stream that draws
// natural frequencies out of the same user-facing seed.
constexpr std::uint64_t kSimSeedSalt = 0x517cc1b727220a95ULL;

double parse_double_strict(const std::string& text, const char* what) {
    double v = 0.0;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), last, v);
    if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
        throw std::invalid_argument(std::string("bad ") + what + " '" + text + "'");
    }
    return v;
}

std::string format_g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

void write_text_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

void write_table_file(const fs::path& path, const std::vector<std::string>& names,
                      const std::vector<std::vector<double>>& columns) {
    std::ostringstream buf;
    write_table_csv(names, columns, buf);
    write_text_file(path, buf.str());
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct AnalyzeOptions {
    std::string input;
    std::string band_text = "24:80";
    std::string out_dir;
    double lock_threshold = 0.1;
    bool svg = false;
};

void write_report_tables(const AnalysisReport& report, const fs::path& out) {
    const std::size_t S = report.sector_ids.size();

    std::vector<double> sector_index(S);
    std::vector<double> omega(S);
    std::vector<double> intercept(S);
    std::vector<double> rms(S);
    for (std::size_t s = 0; s < S; ++s) {
        sector_index[s] = static_cast<double>(s + 1);
        omega[s] = report.fits[s].omega;
        intercept[s] = report.fits[s].intercept;
        rms[s] = report.fits[s].rms_residual;
    }
    write_table_file(out / "frequencies.csv", {"sector", "omega", "intercept", "rms_residual"},
                     {sector_index, omega, intercept, rms});

    write_table_file(out / "lock.csv", {"t", "mu", "sigma", "lock_ratio"},
                     {report.lock.times, report.lock.mu, report.lock.sigma,
                      report.lock.lock_ratio});

    write_table_file(out / "shocks_common.csv", {"t", "mean_amplitude", "common_shock"},
                     {report.shocks.times, report.shocks.mean_amplitude,
                      report.shocks.common_shock});

    std::vector<std::string> ind_names{"t"};
    std::vector<std::vector<double>> ind_cols{report.shocks.times};
    for (std::size_t s = 0; s < S; ++s) {
        ind_names.push_back(report.sector_ids[s]);
        ind_cols.push_back(report.shocks.individual[s]);
    }
    write_table_file(out / "shocks_individual.csv", ind_names, ind_cols);

    std::vector<double> tested(S);
    std::vector<double> statistic(S);
    std::vector<double> critical(S);
    std::vector<double> significance(S);
    std::vector<double> reject(S);
    for (std::size_t s = 0; s < S; ++s) {
        const StationarityEntry& e = report.stationarity[s];
        tested[s] = e.tested ? 1.0 : 0.0;
        statistic[s] = e.tested ? e.result.statistic : 0.0;
        critical[s] = e.tested ? e.result.critical_value : 0.0;
        significance[s] = e.tested ? e.result.significance : 0.0;
        reject[s] = (e.tested && e.result.reject_unit_root) ? 1.0 : 0.0;
    }
    write_table_file(out / "stationarity.csv",
                     {"sector", "tested", "statistic", "critical_value", "significance",
                      "reject_unit_root"},
                     {sector_index, tested, statistic, critical, significance, reject});
}

void write_summary(const AnalysisReport& report, const fs::path& out) {
    const std::size_t S = report.sector_ids.size();
    std::size_t tested = 0;
    std::size_t rejected = 0;
    for (const StationarityEntry& e : report.stationarity) {
        tested += e.tested ? 1 : 0;
        rejected += (e.tested && e.result.reject_unit_root) ? 1 : 0;
    }

    std::ostringstream text;
    text << "analysis summary\n";
    text << "input digest: fnv1a64:" << report.input_digest << "\n";
    text << "sectors: " << S << "\n";
    text << "return samples: " << report.return_dates.size();
    if (!report.return_dates.empty()) {
        text << " (" << report.return_dates.front().str() << " to "
             << report.return_dates.back().str() << ")";
    }
    text << "\n";
    text << "band: [" << format_g(report.config.band.min_period) << ", "
         << format_g(report.config.band.max_period) << "] months\n";
    text << "unit-root significance: " << format_g(report.config.significance) << "\n";
    text << "stationarity: " << rejected << "/" << tested
         << " tested sectors reject a unit root\n";
    if (S >= 2) {
        text << "mean omega: " << format_g(report.entrainment.mean_omega) << " rad/month"
             << " (period " << format_g(2.0 * std::numbers::pi / report.entrainment.mean_omega)
             << " months)\n";
        text << "omega spread: (max-min)/mean = " << format_g(report.entrainment.relative_spread)
             << ", std = " << format_g(report.entrainment.std_omega) << "\n";
    }
    text << "partial phase locking: " << yes_no(report.lock_summary.is_partially_locked)
         << ", fraction=" << format_g(report.lock_summary.fraction_below) << " (threshold "
         << format_g(report.config.lock_threshold) << ", required "
         << format_g(report.config.lock_fraction) << ")\n";
    if (report.warnings.empty()) {
        text << "warnings: none\n";
    } else {
        text << "warnings:\n";
        for (const std::string& w : report.warnings) text << "  - " << w << "\n";
    }
    write_text_file(out / "summary.txt", text.str());
}

void write_charts(const AnalysisReport& report, const fs::path& out) {
    const std::size_t S = report.sector_ids.size();
    const std::vector<double>& t = report.lock.times;

    ChartSpec orbits;
    orbits.title = "Band-passed orbits";
    orbits.x_label = "x(t)";
    orbits.y_label = "y(t)";
    for (std::size_t s = 0; s < S; ++s) {
        orbits.series.push_back({report.sector_ids[s], report.analytic[s].x,
                                 report.analytic[s].y});
    }
    write_text_file(out / "phase_plane.svg", render_svg(orbits));

    ChartSpec phase;
    phase.title = "Unwrapped phase";
    phase.x_label = "months";
    phase.y_label = "phase (rad)";
    phase.x = t;
    for (std::size_t s = 0; s < S; ++s) {
        phase.series.push_back({report.sector_ids[s], {}, report.analytic[s].phase_unwrapped});
    }
    write_text_file(out / "phase_time.svg", render_svg(phase));

    ChartSpec omega;
    omega.title = "Fitted frequency by sector";
    omega.x_label = "sector";
    omega.y_label = "omega (rad/month)";
    omega.x.resize(S);
    std::vector<double> omega_y(S);
    for (std::size_t s = 0; s < S; ++s) {
        omega.x[s] = static_cast<double>(s + 1);
        omega_y[s] = report.fits[s].omega;
    }
    omega.series.push_back({"omega", {}, omega_y});
    write_text_file(out / "omega_by_sector.svg", render_svg(omega));

    ChartSpec lock;
    lock.title = "Phase-lock indicator";
    lock.x_label = "months";
    lock.y_label = "rad/month";
    lock.x = t;
    lock.series.push_back({"mu", {}, report.lock.mu});
    lock.series.push_back({"sigma", {}, report.lock.sigma});
    write_text_file(out / "sigma_trace.svg", render_svg(lock));

    ChartSpec amplitude;
    amplitude.title = "Mean amplitude";
    amplitude.x_label = "months";
    amplitude.y_label = "<A(t)>";
    amplitude.x = report.shocks.times;
    amplitude.series.push_back({"mean amplitude", {}, report.shocks.mean_amplitude});
    write_text_file(out / "amplitude_trace.svg", render_svg(amplitude));

    ChartSpec common;
    common.title = "Common shock";
    common.x_label = "months";
    common.y_label = "<cos theta(t)>";
    common.x = report.shocks.times;
    common.series.push_back({"common shock", {}, report.shocks.common_shock});
    write_text_file(out / "common_shock.svg", render_svg(common));

    ChartSpec individual;
    individual.title = "Individual shocks";
    individual.x_label = "months";
    individual.y_label = "cos theta_i - <cos theta>";
    individual.x = report.shocks.times;
    for (std::size_t s = 0; s < S; ++s) {
        individual.series.push_back({report.sector_ids[s], {}, report.shocks.individual[s]});
    }
    write_text_file(out / "individual_shocks.svg", render_svg(individual));
}

int run_analyze(const AnalyzeOptions& opts) {
    AnalysisConfig cfg;
    cfg.band = parse_band(opts.band_text);
    cfg.lock_threshold = opts.lock_threshold;

    Panel panel;
    {
        std::ifstream in(opts.input, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open input '" + opts.input + "'");
        panel = parse_panel_csv(in);
    }

    const AnalysisReport report = analyze(panel, cfg);

    const fs::path out(opts.out_dir);
    fs::create_directories(out);
    write_report_tables(report, out);
    write_summary(report, out);
    if (opts.svg) write_charts(report, out);

    std::cout << "report written to " << out.string() << "\n";
    return 0;
}

struct KuramotoOptions {
    std::size_t sectors = 16;
    double coupling = 0.5;
    double freq_spread = 0.3;
    double noise = 0.0;
    std::vector<std::string> kicks;
    std::size_t months = 240;
    std::uint64_t seed = 1;
    std::string out_dir;
};

int run_kuramoto(const KuramotoOptions& opts) {
    if (opts.sectors < 1) throw std::invalid_argument("--sectors must be at least 1");
    if (opts.months < 4) throw std::invalid_argument("--months must be at least 4");
    if (opts.noise < 0.0) throw std::invalid_argument("--noise must be nonnegative");
    if (opts.freq_spread < 0.0 || opts.freq_spread >= 2.0) {
        throw std::invalid_argument("--freq-spread must lie in [0, 2)");
    }

    KuramotoConfig cfg;
    cfg.n_oscillators = opts.sectors;
    cfg.coupling = opts.coupling;
    cfg.noise_std.assign(opts.sectors, opts.noise);
    cfg.n_steps = opts.months - 2;  // levels rows = n_steps + 2 = months
    cfg.seed = opts.seed ^ kSimSeedSalt;

    const double mean_omega = 2.0 * std::numbers::pi / kMeanPeriodMonths;
    Rng freq_rng(opts.seed);
    cfg.natural_frequencies.resize(opts.sectors);
    for (double& w : cfg.natural_frequencies) {
        w = mean_omega * (1.0 + opts.freq_spread * (freq_rng.uniform01() - 0.5));
    }
    for (const std::string& kick_text : opts.kicks) {
        cfg.common_kicks.push_back(parse_kick(kick_text));
    }

    const KuramotoResult result = kuramoto_panel(cfg);

    const fs::path out(opts.out_dir);
    fs::create_directories(out);
    write_text_file(out / "panel.csv", panel_to_csv(result.panel));

    std::ostringstream meta;
    meta << "generator: kuramoto\n";
    meta << "sectors: " << opts.sectors << "\n";
    meta << "months: " << opts.months << "\n";
    meta << "coupling: " << format_g(opts.coupling) << " rad/month\n";
    meta << "freq-spread: " << format_g(opts.freq_spread) << " (fraction of mean)\n";
    meta << "mean-period: " << format_g(kMeanPeriodMonths) << " months\n";
    meta << "noise: " << format_g(opts.noise) << " rad/sqrt(month)\n";
    meta << "kicks:";
    if (opts.kicks.empty()) {
        meta << " none\n";
    } else {
        for (const std::string& k : opts.kicks) meta << " " << k;
        meta << "\n";
    }
    meta << "seed: " << opts.seed << "\n";
    meta << "rng: " << Rng::identity() << "\n";
    meta << "natural-frequencies (rad/month):";
    for (double w : cfg.natural_frequencies) meta << " " << format_g(w);
    meta << "\n";
    meta << "panel digest: fnv1a64:" << fnv1a64_hex(panel_to_csv(result.panel)) << "\n";
    write_text_file(out / "meta.txt", meta.str());

    std::cout << "panel written to " << (out / "panel.csv").string() << "\n";
    return 0;
}

struct SlutskyOptions {
    std::size_t n = 0;
    std::size_t window = 10;
    std::uint64_t seed = 1;
    std::string out_dir;
};

int run_slutsky(const SlutskyOptions& opts) {
    const std::vector<double> series = slutsky_series(opts.n, opts.window, opts.seed);

    const fs::path out(opts.out_dir);
    fs::create_directories(out);
    std::ostringstream buf;
    write_table_csv({"value"}, {series}, buf);
    write_text_file(out / "series.csv", buf.str());

    std::ostringstream meta;
    meta << "generator: slutsky\n";
    meta << "n: " << opts.n << "\n";
    meta << "window: " << opts.window << "\n";
    meta << "seed: " << opts.seed << "\n";
    meta << "rng: " << Rng::identity() << "\n";
    meta << "series digest: fnv1a64:" << fnv1a64_hex(buf.str()) << "\n";
    write_text_file(out / "meta.txt", meta.str());

    std::cout << "series written to " << (out / "series.csv").string() << "\n";
    return 0;
}

}  // namespace

BandSpec parse_band(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size()) {
        throw std::invalid_argument("band must be MIN:MAX, got '" + text + "'");
    }
    BandSpec band;
    band.min_period = parse_double_strict(text.substr(0, colon), "band minimum");
    band.max_period = parse_double_strict(text.substr(colon + 1), "band maximum");
    if (!(band.min_period < band.max_period)) {
        throw std::invalid_argument("band minimum must be below maximum, got '" + text + "'");
    }
    return band;
}

CommonKick parse_kick(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size()) {
        throw std::invalid_argument("kick must be STEP:DELTA, got '" + text + "'");
    }
    const std::string step_text = text.substr(0, colon);
    CommonKick kick;
    unsigned long long step = 0;
    const char* last = step_text.data() + step_text.size();
    auto [ptr, ec] = std::from_chars(step_text.data(), last, step);
    if (ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("bad kick step '" + step_text + "'");
    }
    kick.step = static_cast<std::size_t>(step);
    kick.delta = parse_double_strict(text.substr(colon + 1), "kick delta");
    return kick;
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Synchronization analysis of monthly time-series panels"};
    app.require_subcommand(1);

    AnalyzeOptions analyze_opts;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "Run the full analysis on a panel CSV");
    analyze_cmd->add_option("--input", analyze_opts.input, "Panel CSV of index levels")
        ->required();
    analyze_cmd->add_option("--band", analyze_opts.band_text,
                            "Period pass-band in months, MIN:MAX")
        ->capture_default_str();
    analyze_cmd->add_option("--out", analyze_opts.out_dir, "Output directory")->required();
    analyze_cmd
        ->add_option("--lock-threshold", analyze_opts.lock_threshold,
                     "Lock-ratio cutoff for partial locking")
        ->capture_default_str();
    analyze_cmd->add_flag("--svg", analyze_opts.svg, "Also write SVG charts");

    CLI::App* synth = app.add_subcommand("synth", "Generate synthetic data");
    synth->require_subcommand(1);

    KuramotoOptions kuramoto_opts;
    CLI::App* kuramoto_cmd =
        synth->add_subcommand("kuramoto", "Coupled-oscillator panel of index levels");
    kuramoto_cmd->add_option("--sectors", kuramoto_opts.sectors, "Number of sectors")
        ->capture_default_str();
    kuramoto_cmd
        ->add_option("--coupling", kuramoto_opts.coupling, "Coupling strength K, rad/month")
        ->capture_default_str();
    kuramoto_cmd
        ->add_option("--freq-spread", kuramoto_opts.freq_spread,
                     "Natural-frequency spread as a fraction of the mean")
        ->capture_default_str();
    kuramoto_cmd
        ->add_option("--noise", kuramoto_opts.noise, "Phase noise, rad/sqrt(month)")
        ->capture_default_str();
    kuramoto_cmd->add_option("--kick", kuramoto_opts.kicks,
                             "Common phase kick STEP:DELTA (repeatable)");
    kuramoto_cmd->add_option("--months", kuramoto_opts.months, "Panel length in months")
        ->capture_default_str();
    kuramoto_cmd->add_option("--seed", kuramoto_opts.seed, "RNG seed")->capture_default_str();
    kuramoto_cmd->add_option("--out", kuramoto_opts.out_dir, "Output directory")->required();

    SlutskyOptions slutsky_opts;
    CLI::App* slutsky_cmd =
        synth->add_subcommand("slutsky", "Moving sum of uniform random draws");
    slutsky_cmd->add_option("--n", slutsky_opts.n, "Series length")->required();
    slutsky_cmd->add_option("--window", slutsky_opts.window, "Summation window")
        ->capture_default_str();
    slutsky_cmd->add_option("--seed", slutsky_opts.seed, "RNG seed")->capture_default_str();
    slutsky_cmd->add_option("--out", slutsky_opts.out_dir, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (analyze_cmd->parsed()) return run_analyze(analyze_opts);
        if (kuramoto_cmd->parsed()) return run_kuramoto(kuramoto_opts);
        if (slutsky_cmd->parsed()) return run_slutsky(slutsky_opts);
        std::cerr << "error: no command selected\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cyclesync
