// tcvol: simulate, estimate, tune and benchmark the three-stage spot
// volatility / normalised volatility estimator on noisy high-frequency data.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <json.hpp>

#include "tcvol/bench.hpp"
#include "tcvol/errors.hpp"
#include "tcvol/io.hpp"
#include "tcvol/pipeline.hpp"
#include "tcvol/simulate.hpp"
#include "tcvol/tuning.hpp"

using nlohmann::json;
using namespace tcvol;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitDegenerate = 4;

// ---------------------------------------------------------------------------
// Shared option bundles
// ---------------------------------------------------------------------------

struct ModelOptions {
    double drift = 0.0;
    double vol = 1.0;
    std::string jump = "none";  // none | cp | stable
    double jump_intensity = 1.0;
    std::string jump_sizes = "twopoint";  // twopoint | gaussian
    double jump_size = 1.0;
    double jump_prob = 0.5;
    double jump_mean = 0.0;
    double jump_sd = 1.0;
    double stable_index = 1.5;
    double stable_scale = 0.5;
    std::string rate = "constant";  // constant | sine
    double rate_amp = 0.5;
    int rate_freq = 1;
    std::string noise = "gaussian";  // none | gaussian | rademacher
    double sigma = 0.005;
    bool idiosyncratic = false;  // jumps not modulated by the rate

    void add_to(CLI::App& app) {
        app.add_option("--b", drift, "Levy drift");
        app.add_option("--c", vol, "Levy volatility (Gaussian variance coefficient)");
        app.add_option("--jump", jump, "Jump kind: none, cp, stable")
            ->check(CLI::IsMember({"none", "cp", "stable"}));
        app.add_option("--jump-intensity", jump_intensity, "Compound Poisson intensity");
        app.add_option("--jump-sizes", jump_sizes, "CP size distribution: twopoint, gaussian")
            ->check(CLI::IsMember({"twopoint", "gaussian"}));
        app.add_option("--jump-size", jump_size, "Two-point jump size");
        app.add_option("--jump-prob", jump_prob, "Two-point up probability");
        app.add_option("--jump-mean", jump_mean, "Gaussian jump-size mean");
        app.add_option("--jump-sd", jump_sd, "Gaussian jump-size sd");
        app.add_option("--beta", stable_index, "Stable jump activity index in (0,2)");
        app.add_option("--gamma", stable_scale, "Stable jump scale");
        app.add_option("--rate", rate, "Rate process: constant, sine")
            ->check(CLI::IsMember({"constant", "sine"}));
        app.add_option("--rate-amp", rate_amp, "Sine rate amplitude in [0,1)");
        app.add_option("--rate-freq", rate_freq, "Sine rate integer frequency");
        app.add_option("--noise", noise, "Noise kind: none, gaussian, rademacher")
            ->check(CLI::IsMember({"none", "gaussian", "rademacher"}));
        app.add_option("--sigma", sigma, "Noise standard deviation");
        app.add_flag("--idiosyncratic-jumps", idiosyncratic,
                     "Jump intensity constant in time (violates the time-changed model)");
    }

    ModelSpec build() const {
        ModelSpec m;
        m.triplet.drift = drift;
        m.triplet.vol = vol;
        if (jump == "cp") {
            m.triplet.jumps = jump_sizes == "twopoint"
                                  ? JumpSpec::compound_poisson_two_point(jump_intensity,
                                                                         jump_size, jump_prob)
                                  : JumpSpec::compound_poisson_gaussian(jump_intensity,
                                                                        jump_mean, jump_sd);
        } else if (jump == "stable") {
            m.triplet.jumps = JumpSpec::symmetric_stable(stable_index, stable_scale);
        }
        m.rate = rate == "sine" ? RateSpec::sine(rate_amp, rate_freq) : RateSpec::constant();
        if (noise == "gaussian")
            m.noise = NoiseSpec::gaussian(sigma);
        else if (noise == "rademacher")
            m.noise = NoiseSpec::rademacher(sigma);
        m.jumps_time_changed = !idiosyncratic;
        return m;
    }
};

ObservationSeries simulate_from(const ModelSpec& model, int n, std::uint64_t seed) {
    if (model.jumps_time_changed)
        return simulate_tc_levy(model.triplet, model.rate, model.noise, n, seed);
    ItoPathSpec paths;
    paths.vol.resize(n + 1);
    paths.drift.resize(model.triplet.drift != 0.0 ? n + 1 : 0);
    for (int i = 0; i <= n; ++i) {
        const double r = model.rate.value(static_cast<double>(i) / n);
        paths.vol[i] = model.triplet.vol * r;
        if (!paths.drift.empty()) paths.drift[i] = model.triplet.drift * r;
    }
    paths.jumps = model.triplet.jumps;
    return simulate_ito_sm(paths, model.noise, n, seed);
}

struct EstimateOptions {
    double u = 0.0;
    double u_mult = 0.5;
    double h1 = 0.125;
    double h2 = 1.0;
    double h = 0.3;
    bool h_auto = false;
    int order = 1;
    std::string kernel = "epanechnikov";
    double floor = 1e-6;

    void add_to(CLI::App& app) {
        app.add_option("--u", u, "Frequency (0 = auto from the price scale)");
        app.add_option("--u-mult", u_mult, "Multiplier for the automatic frequency");
        app.add_option("--h1", h1, "Pre-averaging bandwidth h1");
        app.add_option("--h2", h2, "Coarse-bin bandwidth h2");
        app.add_option("--h", h, "Smoothing bandwidth");
        app.add_flag("--h-auto", h_auto, "Select the smoothing bandwidth by GCV");
        app.add_option("--order", order, "Local polynomial order N (1 = Nadaraya-Watson)");
        app.add_option("--kernel", kernel, "Kernel: uniform, epanechnikov, biweight")
            ->check(CLI::IsMember({"uniform", "epanechnikov", "biweight"}));
        app.add_option("--floor", floor, "Clamping floor for the local characteristic fns");
    }

    EstimateParams build() const {
        EstimateParams p;
        p.u = u;
        p.u_mult = u_mult;
        p.h1 = h1;
        p.h2 = h2;
        p.h = h_auto ? 0.0 : h;
        p.order = order;
        if (kernel == "uniform")
            p.kernel = Kernel::Uniform;
        else if (kernel == "biweight")
            p.kernel = Kernel::Biweight;
        else
            p.kernel = Kernel::Epanechnikov;
        p.floor = floor;
        return p;
    }
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot open output file: " + path);
    out << text;
    if (!out) throw data_error("failed writing output file: " + path);
}

json layout_json(const BinLayout& layout) {
    return json{{"n", layout.n},   {"h1", layout.h1}, {"h2", layout.h2},
                {"n1", layout.n1}, {"n2", layout.n2}, {"n0", layout.n0},
                {"kappa", layout.kappa}};
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int cmd_simulate(const ModelOptions& mopt, int n, std::uint64_t seed,
                 const std::string& out, const std::string& truth_out) {
    const ModelSpec model = mopt.build();
    const ObservationSeries series = simulate_from(model, n, seed);
    write_series_csv(out, series);
    if (!truth_out.empty()) {
        std::ofstream tout(truth_out);
        if (!tout) throw data_error("cannot open output file: " + truth_out);
        tout << "t,r,c,x\n";
        for (int j = 0; j <= n; ++j)
            tout << format_double(static_cast<double>(j) / n) << ','
                 << format_double(series.truth_r[j]) << ','
                 << format_double(series.truth_c[j]) << ','
                 << format_double(series.truth_x[j]) << '\n';
    }
    std::cout << "wrote " << n << " observations to " << out << "\n";
    return kExitOk;
}

int cmd_estimate(const EstimateOptions& eopt, const std::string& in_csv,
                 const ModelOptions& mopt, int n, std::uint64_t seed, bool simulate,
                 const std::string& out, const std::string& summary_path) {
    if (simulate == !in_csv.empty())
        throw config_error("estimate: provide exactly one of --in or --sim");
    const ObservationSeries series =
        simulate ? simulate_from(mopt.build(), n, seed) : ingest_csv(in_csv);

    const EstimateParams params = eopt.build();
    const EstimateResult res = run_estimate(series, params);

    std::ostringstream csv;
    if (res.degenerate) {
        csv << "t,c_tilde,guard_fraction\n";
        for (std::size_t i = 0; i < res.curve.grid.size(); ++i)
            csv << format_double(res.curve.grid[i]) << ','
                << format_double(res.curve.c_tilde[i]) << ','
                << format_double(res.local.guard_fraction()) << '\n';
    } else {
        csv << "t,c_tilde,r_tilde,guard_fraction\n";
        for (std::size_t i = 0; i < res.curve.grid.size(); ++i)
            csv << format_double(res.curve.grid[i]) << ','
                << format_double(res.curve.c_tilde[i]) << ','
                << format_double(res.curve.r_tilde[i]) << ','
                << format_double(res.local.guard_fraction()) << '\n';
    }
    write_text(out, csv.str());

    json summary;
    summary["version"] = 1;
    summary["params"] = {{"u", res.u_used},
                         {"u_auto", res.u_auto},
                         {"h", res.h_used},
                         {"h_auto", res.h_auto},
                         {"h1", params.h1},
                         {"h2", params.h2},
                         {"order", params.order},
                         {"kernel", eopt.kernel},
                         {"floor", params.floor}};
    summary["layout"] = layout_json(res.layout);
    summary["guard_fraction"] = res.local.guard_fraction();
    summary["degenerate_normalisation"] = res.degenerate;
    summary["ridge_fallback"] = res.curve.ridged;
    if (!res.degenerate) summary["denom"] = res.curve.denom;
    if (!summary_path.empty()) write_text(summary_path, summary.dump(2) + "\n");
    std::cout << summary.dump(2) << "\n";
    return res.degenerate ? kExitDegenerate : kExitOk;
}

int cmd_tune(const EstimateOptions& eopt, const std::string& in_csv,
             const ModelOptions& mopt, int n, std::uint64_t seed, bool simulate,
             std::vector<double> u_grid, std::vector<double> h1_grid,
             std::vector<double> h2_grid, std::vector<double> h_grid,
             const std::string& out) {
    if (simulate == !in_csv.empty())
        throw config_error("tune: provide exactly one of --in or --sim");
    const ObservationSeries series =
        simulate ? simulate_from(mopt.build(), n, seed) : ingest_csv(in_csv);

    TuneGrid grid = default_tune_grid(series, eopt.h1, eopt.h2);
    if (!u_grid.empty()) grid.u_candidates = std::move(u_grid);
    if (!h1_grid.empty()) grid.h1_candidates = std::move(h1_grid);
    if (!h2_grid.empty()) grid.h2_candidates = std::move(h2_grid);
    if (!h_grid.empty()) grid.h_candidates = std::move(h_grid);

    SmoothingConfig base;
    base.order = eopt.build().order;
    base.kernel = eopt.build().kernel;

    const TuneResult result = tune(series, grid, base, eopt.floor);

    json doc;
    doc["version"] = 1;
    doc["best"] = {{"u", result.best.u},
                   {"h1", result.best.h1},
                   {"h2", result.best.h2},
                   {"h", result.best.h},
                   {"score", result.score}};
    json table = json::array();
    for (const auto& e : result.table)
        table.push_back({{"u", e.params.u},
                         {"h1", e.params.h1},
                         {"h2", e.params.h2},
                         {"h", e.params.h},
                         {"score", std::isfinite(e.score) ? json(e.score) : json("inf")}});
    doc["table"] = table;
    if (!out.empty()) write_text(out, doc.dump(2) + "\n");
    std::cout << doc["best"].dump(2) << "\n";
    return kExitOk;
}

int cmd_bench(const ModelOptions& mopt, const EstimateOptions& eopt,
              std::vector<int> ladder, int replicates, std::uint64_t seed, double h0,
              double alpha, bool gcv_bandwidth, int threads, const std::string& out) {
    BenchConfig cfg;
    cfg.ladder = std::move(ladder);
    cfg.replicates = replicates;
    cfg.seed = seed;
    cfg.model = mopt.build();
    cfg.h0 = h0;
    cfg.alpha = alpha;
    cfg.gcv_bandwidth = gcv_bandwidth;
    cfg.u = eopt.u;
    cfg.u_mult = eopt.u_mult;
    cfg.h1 = eopt.h1;
    cfg.h2 = eopt.h2;
    cfg.order = eopt.build().order;
    cfg.kernel = eopt.build().kernel;
    cfg.floor = eopt.floor;
    cfg.threads = threads;

    const BenchReport report = run_bench(cfg);

    json doc;
    doc["version"] = 1;
    doc["replicates"] = report.replicates;
    doc["seed"] = report.seed;
    doc["wall_seconds"] = report.wall_seconds;
    json pts = json::array();
    for (const auto& pt : report.points) {
        json entry = {{"n", pt.n}, {"h", pt.h}, {"rmse_r", pt.rmse_r},
                      {"rmse_c", pt.rmse_c}};
        entry["layout"] = layout_json(make_layout(pt.n, cfg.h1, cfg.h2));
        pts.push_back(entry);
    }
    doc["points"] = pts;
    if (report.slope_r) doc["slope_r"] = *report.slope_r;
    if (report.slope_c) doc["slope_c"] = *report.slope_c;
    if (!out.empty()) write_text(out, doc.dump(2) + "\n");
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spot volatility and normalised volatility (time-change) estimation "
                 "from noisy high-frequency observations"};
    app.require_subcommand(1);
    // --h is an estimator bandwidth, so keep only the long help flag.
    app.set_help_flag("--help", "Print help");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Simulate observations to CSV");
    sim->set_help_flag("--help", "Print help");
    ModelOptions sim_model;
    sim_model.add_to(*sim);
    int sim_n = 65536;
    std::uint64_t sim_seed = 0;
    std::string sim_out = "observations.csv", sim_truth;
    sim->add_option("--n", sim_n, "Number of observations")->required();
    sim->add_option("--seed", sim_seed, "RNG seed")->required();
    sim->add_option("--out", sim_out, "Output CSV path");
    sim->add_option("--truth-out", sim_truth, "Optional ground-truth CSV path");

    // estimate
    auto* est = app.add_subcommand("estimate", "Estimate c and r curves from data");
    est->set_help_flag("--help", "Print help");
    EstimateOptions est_opt;
    est_opt.add_to(*est);
    ModelOptions est_model;
    est_model.add_to(*est);
    std::string est_in, est_out = "estimate.csv", est_summary;
    bool est_sim = false;
    int est_n = 65536;
    std::uint64_t est_seed = 0;
    est->add_option("--in", est_in, "Input CSV (index,log_price or t,log_price)");
    est->add_flag("--sim", est_sim, "Estimate on a simulated path instead of a CSV");
    est->add_option("--n", est_n, "Simulated path length (with --sim)");
    est->add_option("--seed", est_seed, "Simulation seed (with --sim)");
    est->add_option("--out", est_out, "Output CSV path");
    est->add_option("--summary", est_summary, "Output JSON summary path");

    // tune
    auto* tun = app.add_subcommand("tune", "Grid-search (u, h1, h2, h) by GCV");
    tun->set_help_flag("--help", "Print help");
    EstimateOptions tune_opt;
    tune_opt.add_to(*tun);
    ModelOptions tune_model;
    tune_model.add_to(*tun);
    std::string tune_in, tune_out;
    bool tune_sim = false;
    int tune_n = 65536;
    std::uint64_t tune_seed = 0;
    std::vector<double> tune_u, tune_h1, tune_h2, tune_h;
    tun->add_option("--in", tune_in, "Input CSV");
    tun->add_flag("--sim", tune_sim, "Tune on a simulated path instead of a CSV");
    tun->add_option("--n", tune_n, "Simulated path length (with --sim)");
    tun->add_option("--seed", tune_seed, "Simulation seed (with --sim)");
    tun->add_option("--u-grid", tune_u, "Frequency candidates")->delimiter(',');
    tun->add_option("--h1-grid", tune_h1, "h1 candidates")->delimiter(',');
    tun->add_option("--h2-grid", tune_h2, "h2 candidates")->delimiter(',');
    tun->add_option("--h-grid", tune_h, "h candidates")->delimiter(',');
    tun->add_option("--out", tune_out, "Output JSON path (full table)");

    // bench
    auto* ben = app.add_subcommand("bench", "Monte Carlo convergence benchmark");
    ben->set_help_flag("--help", "Print help");
    ModelOptions bench_model;
    bench_model.add_to(*ben);
    EstimateOptions bench_opt;
    bench_opt.add_to(*ben);
    std::vector<int> bench_ladder = {4096, 16384, 65536};
    int bench_reps = 50, bench_threads = 0;
    std::uint64_t bench_seed = 0;
    double bench_h0 = 1.0, bench_alpha = 0.5;
    bool bench_gcv = false;
    std::string bench_out;
    ben->add_option("--ladder", bench_ladder, "Ladder of n values")->delimiter(',');
    ben->add_option("--replicates", bench_reps, "Monte Carlo replicates per n");
    ben->add_option("--seed", bench_seed, "Base seed")->required();
    ben->add_option("--h0", bench_h0, "Bandwidth schedule constant");
    ben->add_option("--alpha", bench_alpha, "Smoothness exponent in the schedule");
    ben->add_flag("--gcv", bench_gcv, "Select h per replicate by GCV instead");
    ben->add_option("--threads", bench_threads, "Worker threads (0 = hardware)");
    ben->add_option("--out", bench_out, "Output JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (sim->parsed())
            return cmd_simulate(sim_model, sim_n, sim_seed, sim_out, sim_truth);
        if (est->parsed())
            return cmd_estimate(est_opt, est_in, est_model, est_n, est_seed, est_sim,
                                est_out, est_summary);
        if (tun->parsed())
            return cmd_tune(tune_opt, tune_in, tune_model, tune_n, tune_seed, tune_sim,
                            tune_u, tune_h1, tune_h2, tune_h, tune_out);
        if (ben->parsed())
            return cmd_bench(bench_model, bench_opt, bench_ladder, bench_reps, bench_seed,
                             bench_h0, bench_alpha, bench_gcv, bench_threads, bench_out);
    } catch (const config_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const data_error& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const degeneracy_error& e) {
        std::cerr << "numerical degeneracy: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
