#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tcvol/pipeline.hpp"
#include "tcvol/simulate.hpp"

namespace tcvol {

// Monte Carlo convergence benchmark: for each n in the ladder, simulate
// `replicates` paths (seeds base + r), estimate the normalised volatility at
// the coarse-bin midpoints with bandwidth h = h0 * n^{-1/(2(2 alpha + 1))},
// and report the RMSE against the model rate. With at least three ladder
// points the log-log slope is fitted by least squares.
struct BenchConfig {
    std::vector<int> ladder;
    int replicates = 50;
    std::uint64_t seed = 1;
    ModelSpec model;

    double h0 = 1.0;
    double alpha = 0.5;
    bool gcv_bandwidth = false;  // select h per replicate by GCV instead of the schedule
    std::vector<double> h_grid = {0.05, 0.1, 0.2, 0.4};

    double u = 0.0;  // 0 = robust-scale rule per replicate
    double u_mult = 0.5;
    double h1 = 0.125;
    double h2 = 1.0;
    int order = 1;
    Kernel kernel = Kernel::Epanechnikov;
    double floor = 1e-6;

    int threads = 0;  // 0 = hardware concurrency
};

struct BenchPoint {
    int n = 0;
    double h = 0.0;       // schedule bandwidth (per-replicate h may differ under GCV)
    double rmse_r = 0.0;  // RMSE of the normalised curve at bin midpoints
    double rmse_c = 0.0;  // RMSE of the volatility curve against c_t
};

struct BenchReport {
    std::vector<BenchPoint> points;
    std::optional<double> slope_r;  // log RMSE vs log n, only with >= 3 points
    std::optional<double> slope_c;
    int replicates = 0;
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;
};

BenchReport run_bench(const BenchConfig& cfg);

// Theoretical smoothing-bandwidth schedule h0 * n^{-1/(2(2 alpha + 1))}.
double bench_bandwidth(double h0, double alpha, int n);

}  // namespace tcvol
