#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "tcvol/errors.hpp"
#include "tcvol/rng.hpp"
#include "tcvol/simulate.hpp"

using namespace tcvol;

TEST_CASE("degenerate zero-dynamics path is constant") {
    LevyTriplet t;  // b = 0, c = 0, no jumps
    const auto s = simulate_tc_levy(t, RateSpec::constant(), NoiseSpec::none(), 8, 99);
    for (double v : s.y) CHECK(v == 0.0);
}

TEST_CASE("pure drift with constant rate is a ramp") {
    LevyTriplet t;
    t.drift = 1.0;
    const auto s = simulate_tc_levy(t, RateSpec::constant(), NoiseSpec::none(), 4, 1);
    REQUIRE(s.n() == 4);
    CHECK(s.y[0] == doctest::Approx(0.0));
    CHECK(s.y[1] == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(s.y[2] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(s.y[3] == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("simulation is reproducible and seed-sensitive") {
    LevyTriplet t;
    t.vol = 1.0;
    t.jumps = JumpSpec::symmetric_stable(1.5, 0.5);
    const auto a = simulate_tc_levy(t, RateSpec::sine(0.5, 1), NoiseSpec::gaussian(0.01),
                                    256, 123);
    const auto b = simulate_tc_levy(t, RateSpec::sine(0.5, 1), NoiseSpec::gaussian(0.01),
                                    256, 123);
    const auto c = simulate_tc_levy(t, RateSpec::sine(0.5, 1), NoiseSpec::gaussian(0.01),
                                    256, 124);
    CHECK(a.y == b.y);
    CHECK(a.y != c.y);
}

TEST_CASE("invalid specs are rejected") {
    LevyTriplet t;
    t.vol = -1.0;
    CHECK_THROWS_AS(simulate_tc_levy(t, RateSpec::constant(), NoiseSpec::none(), 16, 1),
                    config_error);
    t.vol = 1.0;
    CHECK_THROWS_AS(simulate_tc_levy(t, RateSpec::constant(), NoiseSpec::none(), 1, 1),
                    config_error);
    CHECK_THROWS_AS(simulate_tc_levy(t, RateSpec::sine(1.2, 1), NoiseSpec::none(), 16, 1),
                    config_error);
    CHECK_THROWS_AS(JumpSpec::symmetric_stable(2.5, 1.0).validate(), config_error);
    CHECK_THROWS_AS(JumpSpec::compound_poisson_two_point(-1.0, 1.0, 0.5).validate(),
                    config_error);
}

TEST_CASE("stable increments match an independently coded CMS sampler on the same stream") {
    // Same seed stream, second implementation of the transform in log/exp form.
    const double beta = 1.5;
    auto lib_eng = make_engine(7);
    auto ref_eng = make_engine(7);
    std::vector<double> lib(4096), ref(4096);
    for (int i = 0; i < 4096; ++i) {
        lib[i] = sample_standard_stable(beta, lib_eng);
        ref[i] = testkit::stable_cms_reference(beta, ref_eng);
    }
    for (double q : {0.25, 0.5, 0.75}) {
        CHECK(testkit::quantile(lib, q) ==
              doctest::Approx(testkit::quantile(ref, q)).epsilon(1e-9));
    }
}

TEST_CASE("stable sampler matches its defining characteristic function") {
    const double beta = 1.5;
    const int m = 200000;
    for (double u : {0.5, 1.0, 2.0}) {
        // fresh pass per frequency keeps the check independent of draw reuse
        auto e2 = make_engine(2024);
        double s = 0.0, s2 = 0.0;
        for (int i = 0; i < m; ++i) {
            const double c = std::cos(u * sample_standard_stable(beta, e2));
            s += c;
            s2 += c * c;
        }
        const double est = s / m;
        const double sd = std::sqrt(s2 / m - est * est);
        const double target = std::exp(-std::pow(u, beta));
        CHECK(std::abs(est - target) < 4.0 * sd / std::sqrt(static_cast<double>(m)));
    }
}

TEST_CASE("tc increments with a stable part replay through the reference sampler") {
    // b = 0, c = 1, stable(1.5, 0.5), constant rate: replay the draw order
    // (diffusion then stable) with the reference CMS coding and compare the
    // empirical quartiles of the increments.
    const int n = 1 << 12;
    LevyTriplet t;
    t.vol = 1.0;
    t.jumps = JumpSpec::symmetric_stable(1.5, 0.5);
    const auto s = simulate_tc_levy(t, RateSpec::constant(), NoiseSpec::none(), n, 7);
    std::vector<double> lib_inc(n - 1);
    for (int j = 0; j + 1 < n; ++j) lib_inc[j] = s.y[j + 1] - s.y[j];

    auto eng = make_engine(7);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double dr = 1.0 / n;
    std::vector<double> ref_inc(n - 1);
    for (int j = 0; j < n; ++j) {
        const double dx = std::sqrt(dr) * gauss(eng) +
                          0.5 * std::pow(dr, 1.0 / 1.5) *
                              testkit::stable_cms_reference(1.5, eng);
        if (j + 1 < n) ref_inc[j] = dx;
    }
    for (double q : {0.25, 0.5, 0.75}) {
        CHECK(testkit::quantile(lib_inc, q) ==
              doctest::Approx(testkit::quantile(ref_inc, q)).epsilon(1e-9));
    }
}

TEST_CASE("ito_sm Gaussian increments have the right variance") {
    const int n = 1 << 16;
    ItoPathSpec paths;
    paths.vol = {1.0, 1.0};
    const auto s = simulate_ito_sm(paths, NoiseSpec::none(), n, 5);
    std::vector<double> inc(n - 1);
    for (int j = 0; j + 1 < n; ++j) inc[j] = s.y[j + 1] - s.y[j];
    const double v = testkit::sample_variance(inc);
    CHECK(v > 0.9 / n);
    CHECK(v < 1.1 / n);
}

TEST_CASE("ito_sm rejects a flat-zero volatility path") {
    ItoPathSpec paths;
    paths.vol = {0.0, 0.0};
    CHECK_THROWS_AS(simulate_ito_sm(paths, NoiseSpec::none(), 16, 1), config_error);
}

TEST_CASE("stored ground-truth rate integrates to one") {
    LevyTriplet t;
    t.vol = 1.0;
    const auto s = simulate_tc_levy(t, RateSpec::sine(0.5, 1), NoiseSpec::gaussian(0.005),
                                    1 << 14, 3);
    const int n = s.n();
    double trap = 0.0;
    for (int j = 0; j < n; ++j) trap += 0.5 * (s.truth_r[j] + s.truth_r[j + 1]) / n;
    CHECK(trap == doctest::Approx(1.0).epsilon(1e-10));

    // piecewise rate is normalised on construction
    const auto pw = RateSpec::piecewise({0.0, 0.3, 1.0}, {2.0, 1.0, 4.0});
    CHECK(pw.integral(1.0) == doctest::Approx(1.0).epsilon(1e-12));
    pw.validate();
}

TEST_CASE("realised quadratic variation tracks the integrated volatility") {
    // No jumps, no noise: sum of squared increments converges to int c dt.
    const int n = 1 << 16;
    LevyTriplet t;
    t.vol = 1.0;
    int ok = 0;
    const int seeds = 200;
    for (int r = 0; r < seeds; ++r) {
        const auto s = simulate_tc_levy(t, RateSpec::sine(0.5, 2), NoiseSpec::none(), n,
                                        replicate_seed(1000, r));
        double rqv = 0.0;
        for (int j = 0; j + 1 < n; ++j) {
            const double d = s.y[j + 1] - s.y[j];
            rqv += d * d;
        }
        if (std::abs(rqv - 1.0) < 0.05) ++ok;
    }
    CHECK(ok >= 190);
}

TEST_CASE("rademacher noise takes the two signed values") {
    LevyTriplet t;  // zero dynamics, noise only
    const auto s = simulate_tc_levy(t, RateSpec::constant(), NoiseSpec::rademacher(0.01),
                                    256, 8);
    int plus = 0, minus = 0;
    for (double v : s.y) {
        CHECK(std::abs(std::abs(v) - 0.01) < 1e-15);
        (v > 0 ? plus : minus)++;
    }
    CHECK(plus > 64);
    CHECK(minus > 64);
}

TEST_CASE("noise modulation scales the variance profile") {
    NoiseSpec noise = NoiseSpec::gaussian(0.01);
    noise.modulation = RateSpec::sine(0.5, 1);
    noise.validate();
    CHECK(noise.sigma2_at(0.25) == doctest::Approx(1e-4 * 1.5).epsilon(1e-12));
    CHECK(noise.sigma2_at(0.75) == doctest::Approx(1e-4 * 0.5).epsilon(1e-12));

    // empirical: sample variance near t = 0.25 is about 3x that near t = 0.75
    LevyTriplet t;
    const int n = 1 << 14;
    double v_hi = 0.0, v_lo = 0.0;
    int m_hi = 0, m_lo = 0;
    for (int r = 0; r < 20; ++r) {
        const auto s = simulate_tc_levy(t, RateSpec::constant(), noise, n,
                                        replicate_seed(4000, r));
        for (int j = 0; j < n; ++j) {
            const double tt = static_cast<double>(j) / n;
            if (std::abs(tt - 0.25) < 0.05) {
                v_hi += s.y[j] * s.y[j];
                ++m_hi;
            } else if (std::abs(tt - 0.75) < 0.05) {
                v_lo += s.y[j] * s.y[j];
                ++m_lo;
            }
        }
    }
    CHECK(v_hi / m_hi / (v_lo / m_lo) == doctest::Approx(3.0).epsilon(0.1));
}

TEST_CASE("ito_sm integrates the drift path") {
    ItoPathSpec paths;
    paths.vol.assign(9, 1e-12);  // negligible diffusion
    paths.drift = {0.0, 0.25, 0.5, 0.75, 1.0, 0.75, 0.5, 0.25, 0.0};  // tent
    const auto s = simulate_ito_sm(paths, NoiseSpec::none(), 1 << 10, 2);
    // int_0^t b for the tent peaks at 1/2 area by t = 1
    const int n = s.n();
    CHECK(s.truth_x[n] == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(s.y[n / 2] == doctest::Approx(0.25).epsilon(2e-2));
}
