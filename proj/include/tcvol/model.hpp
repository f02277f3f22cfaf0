#pragma once

#include <optional>
#include <vector>

namespace tcvol {

// ---------------------------------------------------------------------------
// Jump specification
// ---------------------------------------------------------------------------

enum class JumpKind { None, CompoundPoisson, SymmetricStable };
enum class JumpSizeKind { TwoPoint, Gaussian };

struct JumpSpec {
    JumpKind kind = JumpKind::None;

    // Compound Poisson: intensity per unit time plus a size distribution.
    double intensity = 0.0;
    JumpSizeKind size_kind = JumpSizeKind::TwoPoint;
    double size = 1.0;        // TwoPoint: jump is +size w.p. prob, -size otherwise
    double prob = 0.5;
    double size_mean = 0.0;   // Gaussian sizes
    double size_sd = 1.0;

    // Symmetric stable: activity index in (0,2) and scale. The Levy measure is
    // normalised so that the jump part of the characteristic exponent is
    // -scale^index * |u|^index.
    double index = 1.5;
    double scale = 1.0;

    static JumpSpec none() { return {}; }
    static JumpSpec compound_poisson_two_point(double lambda, double size, double prob);
    static JumpSpec compound_poisson_gaussian(double lambda, double mean, double sd);
    static JumpSpec symmetric_stable(double index, double scale);

    void validate() const;  // throws config_error
};

// ---------------------------------------------------------------------------
// Levy triplet (drift, Gaussian volatility, jumps)
// ---------------------------------------------------------------------------

struct LevyTriplet {
    double drift = 0.0;
    double vol = 0.0;  // Gaussian variance coefficient c >= 0
    JumpSpec jumps;

    // require_positive_vol: time-changed runs feeding the rate estimator need c > 0.
    void validate(bool require_positive_vol = false) const;
};

// ---------------------------------------------------------------------------
// Rate process r_t > 0 with integral one over [0, 1]
// ---------------------------------------------------------------------------

enum class RateKind { Constant, Sine, PiecewiseSmooth };

struct RateSpec {
    RateKind kind = RateKind::Constant;
    double amplitude = 0.0;  // Sine: r_t = 1 + amplitude * sin(2 pi frequency t)
    int frequency = 1;
    std::vector<double> knots;   // PiecewiseSmooth: linear interpolation, then
    std::vector<double> values;  // rescaled so the trapezoid integral is one

    static RateSpec constant();
    static RateSpec sine(double amplitude, int frequency);
    static RateSpec piecewise(std::vector<double> knots, std::vector<double> values);

    double value(double t) const;
    double integral(double t) const;  // R_t = integral of r over [0, t]
    void validate() const;
};

// ---------------------------------------------------------------------------
// Observation noise
// ---------------------------------------------------------------------------

enum class NoiseKind { None, Gaussian, Rademacher };

struct NoiseSpec {
    NoiseKind kind = NoiseKind::None;
    double sigma = 0.0;
    // Optional time modulation of the noise variance: sigma^2_t = sigma^2 * modulation(t).
    std::optional<RateSpec> modulation;

    static NoiseSpec none() { return {}; }
    static NoiseSpec gaussian(double sigma);
    static NoiseSpec rademacher(double sigma);

    double sigma2_at(double t) const;
    void validate() const;
};

// ---------------------------------------------------------------------------
// Observations and the generative description used by oracles
// ---------------------------------------------------------------------------

struct ObservationSeries {
    std::vector<double> y;  // Y_0 .. Y_{n-1} on the grid j/n

    // Optional ground truth sampled on the fine grid t = j/n (n + 1 points).
    std::vector<double> truth_r;
    std::vector<double> truth_c;
    std::vector<double> truth_x;

    int n() const { return static_cast<int>(y.size()); }
};

struct ModelSpec {
    LevyTriplet triplet;
    RateSpec rate;
    NoiseSpec noise;
    // True: jump measure is rate-modulated (nu_t = r_t nu, the time-changed
    // model). False: jumps are idiosyncratic with constant-in-time measure.
    bool jumps_time_changed = true;

    // Spot characteristics at time t.
    double spot_vol_at(double t) const { return triplet.vol * rate.value(t); }
    double jump_rate_factor(double t) const { return jumps_time_changed ? rate.value(t) : 1.0; }
};

}  // namespace tcvol
