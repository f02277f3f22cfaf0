#include "tcvol/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <thread>

#include "tcvol/errors.hpp"
#include "tcvol/rng.hpp"

namespace tcvol {

double bench_bandwidth(double h0, double alpha, int n) {
    const double expo = -1.0 / (2.0 * (2.0 * alpha + 1.0));
    return std::min(1.0, h0 * std::pow(static_cast<double>(n), expo));
}

namespace {

ObservationSeries simulate_model(const ModelSpec& model, int n, std::uint64_t seed) {
    if (model.jumps_time_changed)
        return simulate_tc_levy(model.triplet, model.rate, model.noise, n, seed);
    // Idiosyncratic jumps: diffusion characteristics still follow the rate,
    // but the jump intensity does not.
    ItoPathSpec paths;
    paths.vol.resize(n + 1);
    for (int i = 0; i <= n; ++i)
        paths.vol[i] = model.triplet.vol * model.rate.value(static_cast<double>(i) / n);
    if (model.triplet.drift != 0.0) {
        paths.drift.resize(n + 1);
        for (int i = 0; i <= n; ++i)
            paths.drift[i] = model.triplet.drift * model.rate.value(static_cast<double>(i) / n);
    }
    paths.jumps = model.triplet.jumps;
    return simulate_ito_sm(paths, model.noise, n, seed);
}

struct ReplicateError {
    double mse_r = 0.0;
    double mse_c = 0.0;
};

ReplicateError one_replicate(const BenchConfig& cfg, int n, double h, std::uint64_t seed) {
    const ObservationSeries series = simulate_model(cfg.model, n, seed);

    EstimateParams params;
    params.u = cfg.u;
    params.u_mult = cfg.u_mult;
    params.h1 = cfg.h1;
    params.h2 = cfg.h2;
    params.h = cfg.gcv_bandwidth ? 0.0 : h;
    params.h_grid = cfg.h_grid;
    params.order = cfg.order;
    params.kernel = cfg.kernel;
    params.floor = cfg.floor;

    const BinLayout layout = make_layout(n, cfg.h1, cfg.h2);
    params.grid.reserve(layout.n2);
    for (int l = 0; l < layout.n2; ++l) params.grid.push_back((l + 0.5) / layout.n2);

    const EstimateResult res = run_estimate(series, params);
    if (res.degenerate)
        throw degeneracy_error("run_bench: degenerate normalisation in a replicate");

    const double total_vol = cfg.model.triplet.vol;  // int c_t dt for a unit-rate model
    ReplicateError err;
    for (int l = 0; l < layout.n2; ++l) {
        const double t = params.grid[l];
        const double r_true = cfg.model.rate.value(t);
        const double c_true = total_vol * r_true;
        const double dr = res.curve.r_tilde[l] - r_true;
        const double dc = res.curve.c_tilde[l] - c_true;
        err.mse_r += dr * dr;
        err.mse_c += dc * dc;
    }
    err.mse_r /= layout.n2;
    err.mse_c /= layout.n2;
    return err;
}

double fit_slope(const std::vector<double>& logn, const std::vector<double>& logv) {
    const std::size_t m = logn.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        mx += logn[i];
        my += logv[i];
    }
    mx /= m;
    my /= m;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxy += (logn[i] - mx) * (logv[i] - my);
        sxx += (logn[i] - mx) * (logn[i] - mx);
    }
    return sxy / sxx;
}

}  // namespace

BenchReport run_bench(const BenchConfig& cfg) {
    if (cfg.ladder.empty()) throw config_error("run_bench: empty n ladder");
    if (cfg.replicates < 1) throw config_error("run_bench: replicates must be >= 1");
    cfg.model.triplet.validate(cfg.model.jumps_time_changed);
    cfg.model.rate.validate();
    cfg.model.noise.validate();

    // Fail on an infeasible layout before any simulation.
    int n_min = cfg.ladder.front();
    for (int n : cfg.ladder) n_min = std::min(n_min, n);
    (void)make_layout(n_min, cfg.h1, cfg.h2);

    const auto t_start = std::chrono::steady_clock::now();

    BenchReport report;
    report.replicates = cfg.replicates;
    report.seed = cfg.seed;

    int threads = cfg.threads > 0 ? cfg.threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min(threads, cfg.replicates);

    for (int n : cfg.ladder) {
        const double h = bench_bandwidth(cfg.h0, cfg.alpha, n);
        std::vector<ReplicateError> errs(cfg.replicates);

        // Replicates are independent with derived seeds; each thread fills its
        // own slots, so the aggregate does not depend on scheduling.
        std::exception_ptr failure;
        std::mutex failure_mtx;
        auto worker = [&](int begin, int end) {
            for (int r = begin; r < end; ++r) {
                try {
                    errs[r] = one_replicate(cfg, n, h, replicate_seed(cfg.seed, r));
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mtx);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        if (threads == 1) {
            worker(0, cfg.replicates);
        } else {
            std::vector<std::thread> pool;
            const int chunk = (cfg.replicates + threads - 1) / threads;
            for (int tix = 0; tix < threads; ++tix) {
                const int begin = tix * chunk;
                const int end = std::min(cfg.replicates, begin + chunk);
                if (begin >= end) break;
                pool.emplace_back(worker, begin, end);
            }
            for (auto& th : pool) th.join();
        }
        if (failure) std::rethrow_exception(failure);

        BenchPoint pt;
        pt.n = n;
        pt.h = h;
        double mr = 0.0, mc = 0.0;
        for (const auto& e : errs) {
            mr += e.mse_r;
            mc += e.mse_c;
        }
        pt.rmse_r = std::sqrt(mr / cfg.replicates);
        pt.rmse_c = std::sqrt(mc / cfg.replicates);
        report.points.push_back(pt);
    }

    if (report.points.size() >= 3) {
        std::vector<double> logn, logr, logc;
        for (const auto& pt : report.points) {
            logn.push_back(std::log(static_cast<double>(pt.n)));
            logr.push_back(std::log(pt.rmse_r));
            logc.push_back(std::log(pt.rmse_c));
        }
        report.slope_r = fit_slope(logn, logr);
        report.slope_c = fit_slope(logn, logc);
    }

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return report;
}

}  // namespace tcvol
