#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "tcvol/bench.hpp"
#include "tcvol/errors.hpp"

using namespace tcvol;

namespace {

BenchConfig small_cfg() {
    BenchConfig cfg;
    cfg.ladder = {4096};
    cfg.replicates = 2;
    cfg.seed = 7;
    cfg.model.triplet.vol = 1.0;
    cfg.model.rate = RateSpec::sine(0.5, 1);
    cfg.model.noise = NoiseSpec::gaussian(0.005);
    return cfg;
}

}  // namespace

TEST_CASE("single ladder point yields one RMSE and no slope") {
    BenchConfig cfg = small_cfg();
    cfg.replicates = 1;
    const auto report = run_bench(cfg);
    REQUIRE(report.points.size() == 1);
    CHECK(report.points[0].rmse_r >= 0.0);
    CHECK(report.points[0].rmse_c >= 0.0);
    CHECK(!report.slope_r.has_value());
    CHECK(!report.slope_c.has_value());
}

TEST_CASE("bench bandwidth follows the schedule") {
    CHECK(bench_bandwidth(1.0, 0.5, 65536) == doctest::Approx(0.0625).epsilon(1e-14));
    CHECK(bench_bandwidth(2.0, 0.5, 4096) == doctest::Approx(0.25).epsilon(1e-14));
    // alpha = 1 -> exponent 1/6
    CHECK(bench_bandwidth(1.0, 1.0, 4096) ==
          doctest::Approx(std::pow(4096.0, -1.0 / 6.0)).epsilon(1e-12));
}

TEST_CASE("bench is deterministic and replicate aggregation is order independent") {
    BenchConfig cfg = small_cfg();
    cfg.replicates = 4;
    const auto a = run_bench(cfg);
    cfg.threads = 4;  // chunked workers fill fixed slots
    const auto b = run_bench(cfg);
    CHECK(a.points[0].rmse_r == b.points[0].rmse_r);
    CHECK(a.points[0].rmse_c == b.points[0].rmse_c);
}

TEST_CASE("gcv bandwidth switch selects per replicate and still runs") {
    BenchConfig cfg = small_cfg();
    cfg.gcv_bandwidth = true;
    const auto a = run_bench(cfg);
    const auto b = run_bench(cfg);
    CHECK(a.points[0].rmse_r == b.points[0].rmse_r);
    CHECK(a.points[0].rmse_r >= 0.0);
}

TEST_CASE("bench validates its configuration up front") {
    BenchConfig cfg = small_cfg();
    cfg.ladder.clear();
    CHECK_THROWS_AS(run_bench(cfg), config_error);

    cfg = small_cfg();
    cfg.replicates = 0;
    CHECK_THROWS_AS(run_bench(cfg), config_error);

    cfg = small_cfg();
    cfg.ladder = {16, 4096};  // infeasible layout at the smallest n
    cfg.h1 = 0.05;
    CHECK_THROWS_AS(run_bench(cfg), config_error);

    cfg = small_cfg();
    cfg.model.triplet.vol = 0.0;  // time-changed rate runs need c > 0
    CHECK_THROWS_AS(run_bench(cfg), config_error);
}
