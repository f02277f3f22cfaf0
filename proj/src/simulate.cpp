#include "tcvol/simulate.hpp"

#include <cmath>

#include "tcvol/errors.hpp"
#include "tcvol/oracle.hpp"
#include "tcvol/rng.hpp"

namespace tcvol {

namespace {

// Sum of one compound-Poisson step: count ~ Poisson(lambda * dt), sizes drawn
// per the spec, minus the small-jump compensator lambda * E[x 1(|x|<1)] * dt.
double cp_increment(const JumpSpec& j, double dt, std::mt19937_64& eng) {
    std::poisson_distribution<int> pois(j.intensity * dt);
    const int count = pois(eng);
    double total = 0.0;
    if (j.size_kind == JumpSizeKind::TwoPoint) {
        std::bernoulli_distribution up(j.prob);
        for (int i = 0; i < count; ++i) total += up(eng) ? j.size : -j.size;
    } else {
        std::normal_distribution<double> sz(j.size_mean, j.size_sd);
        for (int i = 0; i < count; ++i) total += sz(eng);
    }
    return total - j.intensity * cp_truncated_mean(j) * dt;
}

struct StepDraws {
    std::normal_distribution<double> gauss{0.0, 1.0};
};

}  // namespace

ObservationSeries simulate_tc_levy(const LevyTriplet& triplet, const RateSpec& rate,
                                   const NoiseSpec& noise, int n, std::uint64_t seed) {
    if (n < 2) throw config_error("simulate_tc_levy: n must be >= 2");
    triplet.validate(/*require_positive_vol=*/false);
    rate.validate();
    noise.validate();

    auto eng = make_engine(seed);
    StepDraws d;

    ObservationSeries out;
    out.y.resize(n);
    out.truth_r.resize(n + 1);
    out.truth_c.resize(n + 1);
    out.truth_x.resize(n + 1);

    const bool has_gauss = triplet.vol > 0.0;
    const bool has_cp =
        triplet.jumps.kind == JumpKind::CompoundPoisson && triplet.jumps.intensity > 0.0;
    const bool has_stable = triplet.jumps.kind == JumpKind::SymmetricStable;

    // Draw order per step is fixed (diffusion, stable, compound Poisson) so
    // runs are reproducible and replayable by tests.
    double x = 0.0;
    out.truth_x[0] = x;
    double r_prev = rate.integral(0.0);
    for (int j = 0; j < n; ++j) {
        const double t1 = static_cast<double>(j + 1) / n;
        const double r_next = rate.integral(t1);
        const double dr = r_next - r_prev;
        r_prev = r_next;

        double dx = triplet.drift * dr;
        if (has_gauss) dx += std::sqrt(triplet.vol * dr) * d.gauss(eng);
        if (has_stable)
            dx += triplet.jumps.scale * std::pow(dr, 1.0 / triplet.jumps.index) *
                  sample_standard_stable(triplet.jumps.index, eng);
        if (has_cp) dx += cp_increment(triplet.jumps, dr, eng);
        x += dx;
        out.truth_x[j + 1] = x;
    }
    for (int j = 0; j <= n; ++j) {
        const double t = static_cast<double>(j) / n;
        out.truth_r[j] = rate.value(t);
        out.truth_c[j] = triplet.vol * out.truth_r[j];
    }

    for (int j = 0; j < n; ++j) out.y[j] = out.truth_x[j];
    if (noise.kind == NoiseKind::Gaussian) {
        for (int j = 0; j < n; ++j)
            out.y[j] += std::sqrt(noise.sigma2_at(static_cast<double>(j) / n)) * d.gauss(eng);
    } else if (noise.kind == NoiseKind::Rademacher) {
        std::bernoulli_distribution sign(0.5);
        for (int j = 0; j < n; ++j) {
            const double s = std::sqrt(noise.sigma2_at(static_cast<double>(j) / n));
            out.y[j] += sign(eng) ? s : -s;
        }
    }
    return out;
}

namespace {

// Integral of the piecewise-linear interpolant of `path` (on the uniform grid
// over [0, 1]) across [a, b]. Trapezoid rule, exact for the interpolant.
double path_integral(const std::vector<double>& path, double a, double b) {
    const int m = static_cast<int>(path.size()) - 1;
    auto value = [&](double t) {
        const double s = t * m;
        int i = static_cast<int>(s);
        if (i >= m) i = m - 1;
        const double w = s - i;
        return path[i] + w * (path[i + 1] - path[i]);
    };
    const int ia = std::min(static_cast<int>(a * m), m - 1);
    const int ib = std::min(static_cast<int>(b * m), m - 1);
    if (ia == ib) return 0.5 * (value(a) + value(b)) * (b - a);
    double acc = 0.5 * (value(a) + path[ia + 1]) * ((ia + 1.0) / m - a);
    for (int i = ia + 1; i < ib; ++i) acc += 0.5 * (path[i] + path[i + 1]) / m;
    acc += 0.5 * (path[ib] + value(b)) * (b - static_cast<double>(ib) / m);
    return acc;
}

}  // namespace

ObservationSeries simulate_ito_sm(const ItoPathSpec& paths, const NoiseSpec& noise,
                                  int n, std::uint64_t seed) {
    if (n < 2) throw config_error("simulate_ito_sm: n must be >= 2");
    if (paths.vol.size() < 2)
        throw config_error("simulate_ito_sm: volatility path needs at least two grid values");
    for (double c : paths.vol)
        if (!(c > 0.0))
            throw config_error("simulate_ito_sm: volatility path must be strictly positive");
    if (!paths.drift.empty() && paths.drift.size() < 2)
        throw config_error("simulate_ito_sm: drift path needs at least two grid values");
    paths.jumps.validate();
    noise.validate();

    auto eng = make_engine(seed);
    StepDraws d;

    ObservationSeries out;
    out.y.resize(n);
    out.truth_x.resize(n + 1);

    const bool has_cp =
        paths.jumps.kind == JumpKind::CompoundPoisson && paths.jumps.intensity > 0.0;
    const bool has_stable = paths.jumps.kind == JumpKind::SymmetricStable;

    double x = 0.0;
    out.truth_x[0] = x;
    for (int j = 0; j < n; ++j) {
        const double t0 = static_cast<double>(j) / n;
        const double t1 = static_cast<double>(j + 1) / n;
        const double var = path_integral(paths.vol, t0, t1);
        double dx = std::sqrt(var) * d.gauss(eng);
        if (!paths.drift.empty()) dx += path_integral(paths.drift, t0, t1);
        // Idiosyncratic jumps: physical-time increments, not rate-modulated.
        if (has_stable)
            dx += paths.jumps.scale * std::pow(1.0 / n, 1.0 / paths.jumps.index) *
                  sample_standard_stable(paths.jumps.index, eng);
        if (has_cp) dx += cp_increment(paths.jumps, 1.0 / n, eng);
        x += dx;
        out.truth_x[j + 1] = x;
    }

    // Normalised volatility ground truth r_t = c_t / int_0^1 c_s ds.
    const double total = path_integral(paths.vol, 0.0, 1.0);
    out.truth_c.resize(n + 1);
    out.truth_r.resize(n + 1);
    const int m = static_cast<int>(paths.vol.size()) - 1;
    for (int j = 0; j <= n; ++j) {
        const double s = static_cast<double>(j) / n * m;
        int i = static_cast<int>(s);
        if (i >= m) i = m - 1;
        const double w = s - i;
        out.truth_c[j] = paths.vol[i] + w * (paths.vol[i + 1] - paths.vol[i]);
        out.truth_r[j] = out.truth_c[j] / total;
    }

    for (int j = 0; j < n; ++j) out.y[j] = out.truth_x[j];
    if (noise.kind == NoiseKind::Gaussian) {
        for (int j = 0; j < n; ++j)
            out.y[j] += std::sqrt(noise.sigma2_at(static_cast<double>(j) / n)) * d.gauss(eng);
    } else if (noise.kind == NoiseKind::Rademacher) {
        std::bernoulli_distribution sign(0.5);
        for (int j = 0; j < n; ++j) {
            const double s = std::sqrt(noise.sigma2_at(static_cast<double>(j) / n));
            out.y[j] += sign(eng) ? s : -s;
        }
    }
    return out;
}

}  // namespace tcvol
