#include "tcvol/model.hpp"

#include <cmath>
#include <sstream>

#include "tcvol/errors.hpp"

namespace tcvol {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

JumpSpec JumpSpec::compound_poisson_two_point(double lambda, double size, double prob) {
    JumpSpec j;
    j.kind = JumpKind::CompoundPoisson;
    j.intensity = lambda;
    j.size_kind = JumpSizeKind::TwoPoint;
    j.size = size;
    j.prob = prob;
    return j;
}

JumpSpec JumpSpec::compound_poisson_gaussian(double lambda, double mean, double sd) {
    JumpSpec j;
    j.kind = JumpKind::CompoundPoisson;
    j.intensity = lambda;
    j.size_kind = JumpSizeKind::Gaussian;
    j.size_mean = mean;
    j.size_sd = sd;
    return j;
}

JumpSpec JumpSpec::symmetric_stable(double index, double scale) {
    JumpSpec j;
    j.kind = JumpKind::SymmetricStable;
    j.index = index;
    j.scale = scale;
    return j;
}

void JumpSpec::validate() const {
    switch (kind) {
        case JumpKind::None:
            return;
        case JumpKind::CompoundPoisson:
            if (!(intensity >= 0.0))
                throw config_error("JumpSpec: compound Poisson intensity must be >= 0");
            if (size_kind == JumpSizeKind::TwoPoint && !(prob >= 0.0 && prob <= 1.0))
                throw config_error("JumpSpec: two-point probability must lie in [0, 1]");
            if (size_kind == JumpSizeKind::Gaussian && !(size_sd >= 0.0))
                throw config_error("JumpSpec: Gaussian jump-size sd must be >= 0");
            return;
        case JumpKind::SymmetricStable:
            if (!(index > 0.0 && index < 2.0))
                throw config_error("JumpSpec: stable index must lie in (0, 2)");
            if (!(scale > 0.0))
                throw config_error("JumpSpec: stable scale must be > 0");
            return;
    }
}

void LevyTriplet::validate(bool require_positive_vol) const {
    if (!(vol >= 0.0)) throw config_error("LevyTriplet: volatility must be >= 0");
    if (require_positive_vol && !(vol > 0.0))
        throw config_error("LevyTriplet: time-changed runs require volatility > 0");
    if (!std::isfinite(drift)) throw config_error("LevyTriplet: drift must be finite");
    jumps.validate();
}

RateSpec RateSpec::constant() { return {}; }

RateSpec RateSpec::sine(double amplitude, int frequency) {
    RateSpec r;
    r.kind = RateKind::Sine;
    r.amplitude = amplitude;
    r.frequency = frequency;
    return r;
}

RateSpec RateSpec::piecewise(std::vector<double> knots, std::vector<double> values) {
    RateSpec r;
    r.kind = RateKind::PiecewiseSmooth;
    r.knots = std::move(knots);
    r.values = std::move(values);
    if (r.knots.size() != r.values.size() || r.knots.size() < 2)
        throw config_error("RateSpec: piecewise spec needs matching knots/values, at least two");
    if (r.knots.front() != 0.0 || r.knots.back() != 1.0)
        throw config_error("RateSpec: piecewise knots must start at 0 and end at 1");
    for (std::size_t i = 1; i < r.knots.size(); ++i)
        if (!(r.knots[i] > r.knots[i - 1]))
            throw config_error("RateSpec: piecewise knots must be strictly increasing");
    for (double v : r.values)
        if (!(v > 0.0)) throw config_error("RateSpec: rate must be strictly positive");
    // Rescale so the trapezoid integral (exact for the linear interpolant) is one.
    double total = 0.0;
    for (std::size_t i = 1; i < r.knots.size(); ++i)
        total += 0.5 * (r.values[i] + r.values[i - 1]) * (r.knots[i] - r.knots[i - 1]);
    for (double& v : r.values) v /= total;
    return r;
}

double RateSpec::value(double t) const {
    switch (kind) {
        case RateKind::Constant:
            return 1.0;
        case RateKind::Sine:
            return 1.0 + amplitude * std::sin(2.0 * kPi * frequency * t);
        case RateKind::PiecewiseSmooth: {
            if (t <= knots.front()) return values.front();
            if (t >= knots.back()) return values.back();
            std::size_t i = 1;
            while (knots[i] < t) ++i;
            const double w = (t - knots[i - 1]) / (knots[i] - knots[i - 1]);
            return values[i - 1] + w * (values[i] - values[i - 1]);
        }
    }
    return 1.0;
}

double RateSpec::integral(double t) const {
    switch (kind) {
        case RateKind::Constant:
            return t;
        case RateKind::Sine:
            return t + amplitude * (1.0 - std::cos(2.0 * kPi * frequency * t)) /
                           (2.0 * kPi * frequency);
        case RateKind::PiecewiseSmooth: {
            double acc = 0.0;
            for (std::size_t i = 1; i < knots.size(); ++i) {
                const double lo = knots[i - 1], hi = knots[i];
                if (t <= lo) break;
                const double up = std::min(t, hi);
                const double vlo = values[i - 1];
                const double vup = vlo + (values[i] - vlo) * (up - lo) / (hi - lo);
                acc += 0.5 * (vlo + vup) * (up - lo);
            }
            return acc;
        }
    }
    return t;
}

void RateSpec::validate() const {
    switch (kind) {
        case RateKind::Constant:
            return;
        case RateKind::Sine: {
            if (!(amplitude >= 0.0 && amplitude < 1.0))
                throw config_error("RateSpec: sine amplitude must lie in [0, 1)");
            if (frequency < 1) throw config_error("RateSpec: sine frequency must be >= 1");
            return;
        }
        case RateKind::PiecewiseSmooth: {
            if (knots.size() != values.size() || knots.size() < 2)
                throw config_error("RateSpec: inconsistent piecewise spec");
            for (double v : values)
                if (!(v > 0.0)) throw config_error("RateSpec: rate must be strictly positive");
            if (std::abs(integral(1.0) - 1.0) > 1e-10) {
                std::ostringstream os;
                os << "RateSpec: piecewise rate integrates to " << integral(1.0)
                   << ", expected 1 within 1e-10";
                throw config_error(os.str());
            }
            return;
        }
    }
}

NoiseSpec NoiseSpec::gaussian(double sigma) {
    NoiseSpec s;
    s.kind = NoiseKind::Gaussian;
    s.sigma = sigma;
    return s;
}

NoiseSpec NoiseSpec::rademacher(double sigma) {
    NoiseSpec s;
    s.kind = NoiseKind::Rademacher;
    s.sigma = sigma;
    return s;
}

double NoiseSpec::sigma2_at(double t) const {
    if (kind == NoiseKind::None) return 0.0;
    const double mod = modulation ? modulation->value(t) : 1.0;
    return sigma * sigma * mod;
}

void NoiseSpec::validate() const {
    if (!(sigma >= 0.0)) throw config_error("NoiseSpec: sigma must be >= 0");
    if (modulation) {
        modulation->validate();
        // Positivity of the modulation on a scan grid.
        for (int i = 0; i <= 200; ++i)
            if (!(modulation->value(i / 200.0) > 0.0))
                throw config_error("NoiseSpec: modulation must be strictly positive");
    }
}

}  // namespace tcvol
