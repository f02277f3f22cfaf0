#pragma once

// Test-side oracles and small statistics helpers. These deliberately
// re-derive quantities from first principles, independent of the library
// code paths they are used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "tcvol/model.hpp"
#include "tcvol/preaverage.hpp"
#include "tcvol/quadrature.hpp"

namespace testkit {

inline double mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

inline double sample_variance(const std::vector<double>& v) {
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
}

inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size();
    return m % 2 == 1 ? v[m / 2] : 0.5 * (v[m / 2 - 1] + v[m / 2]);
}

inline double quantile(std::vector<double> v, double q) {
    std::sort(v.begin(), v.end());
    const double pos = q * (v.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (pos - lo) * (v[hi] - v[lo]);
}

// Direct-summation pre-averaging oracle. Uses the real-interval definition of
// the index sets J_k literally: j is in J_k iff k * n/n0 <= j < (k+1) * n/n0,
// checked by cross-multiplication, with no shared code with the library.
struct PreAverageOracle {
    std::vector<double> xhat;
    std::vector<double> sigma2hat;
};

inline PreAverageOracle preaverage_oracle(const std::vector<double>& y, int n0) {
    const int n = static_cast<int>(y.size());
    PreAverageOracle out;
    out.xhat.assign(n0, 0.0);
    out.sigma2hat.assign(n0, 0.0);
    const double pi = std::acos(-1.0);
    auto in_bin = [&](long long j, int k) {
        // k * n <= j * n0 < (k + 1) * n
        return static_cast<long long>(k) * n <= j * n0 &&
               j * n0 < static_cast<long long>(k + 1) * n;
    };
    for (int k = 0; k < n0; ++k) {
        for (int j = 0; j + 1 < n; ++j) {
            if (!in_bin(j, k) || !in_bin(j + 1, k)) continue;
            const double pj = std::sqrt(static_cast<double>(n0)) * 2.0 *
                              std::sin(2.0 * pi * n0 * static_cast<double>(j) / n);
            const double dy = y[j + 1] - y[j];
            out.xhat[k] += pj * dy;
            out.sigma2hat[k] += dy * dy;
        }
        out.sigma2hat[k] *= static_cast<double>(n0) / (2.0 * n);
    }
    return out;
}

// Second, independently coded Chambers-Mallows-Stuck sampler (log/exp form).
// Consumes two uniforms in the same order as the library sampler.
inline double stable_cms_reference(double beta, std::mt19937_64& eng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double pi = std::acos(-1.0);
    const double v = pi * (unif(eng) - 0.5);
    double w = -std::log1p(-unif(eng));
    if (w < 1e-300) w = 1e-300;
    if (beta == 1.0) return std::tan(v);
    const double log_num = std::log(std::abs(std::sin(beta * v)));
    const double log_cos = std::log(std::cos(v));
    const double log_tail =
        (1.0 - beta) / beta * (std::log(std::cos((1.0 - beta) * v)) - std::log(w));
    const double sign = std::sin(beta * v) >= 0.0 ? 1.0 : -1.0;
    return sign * std::exp(log_num - log_cos / beta + log_tail);
}

// Complex spot characteristic exponent by quadrature:
//   int (e^{iux} - 1 - iux 1(|x|<1)) nu(dx),
// atoms summed exactly, densities integrated adaptively with the domain split
// at +-1 where the truncation indicator jumps, and at 0 for the stable
// density singularity.
inline std::complex<double> theta_jump_quad(double u, const tcvol::JumpSpec& j) {
    using tcvol::adaptive_simpson;
    const std::complex<double> i(0.0, 1.0);
    switch (j.kind) {
        case tcvol::JumpKind::None:
            return {0.0, 0.0};
        case tcvol::JumpKind::CompoundPoisson: {
            auto integrand_re = [&](double x) { return std::cos(u * x) - 1.0; };
            auto integrand_im = [&](double x) {
                return std::sin(u * x) - (std::abs(x) < 1.0 ? u * x : 0.0);
            };
            if (j.size_kind == tcvol::JumpSizeKind::TwoPoint) {
                std::complex<double> acc(0.0, 0.0);
                acc += j.prob * std::complex<double>(integrand_re(j.size),
                                                     integrand_im(j.size));
                acc += (1.0 - j.prob) * std::complex<double>(integrand_re(-j.size),
                                                             integrand_im(-j.size));
                return j.intensity * acc;
            }
            const double m = j.size_mean, s = j.size_sd;
            auto dens = [&](double x) {
                const double z = (x - m) / s;
                return std::exp(-0.5 * z * z) / (s * std::sqrt(2.0 * std::acos(-1.0)));
            };
            const double lo = m - 12.0 * s, hi = m + 12.0 * s;
            std::vector<double> cuts = {lo, -1.0, 1.0, hi};
            std::erase_if(cuts, [&](double c) { return c < lo || c > hi; });
            std::sort(cuts.begin(), cuts.end());
            double re = 0.0, im = 0.0;
            for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
                re += adaptive_simpson(
                    [&](double x) { return integrand_re(x) * dens(x); }, cuts[p],
                    cuts[p + 1], 1e-13);
                im += adaptive_simpson(
                    [&](double x) { return integrand_im(x) * dens(x); }, cuts[p],
                    cuts[p + 1], 1e-13);
            }
            return j.intensity * std::complex<double>(re, im);
        }
        case tcvol::JumpKind::SymmetricStable: {
            // Symmetric measure: imaginary part vanishes; real part reduces to
            // -2 coeff |u|^beta J(beta) with J computed numerically.
            const double beta = j.index;
            const double coeff =
                std::pow(j.scale, beta) / (2.0 * [&] {
                    const double pi = std::acos(-1.0);
                    if (std::abs(beta - 1.0) < 1e-12) return pi / 2.0;
                    return std::tgamma(2.0 - beta) * std::cos(pi * beta / 2.0) /
                           (beta * (1.0 - beta));
                }());
            const double eps = 1.0, X = 400.0;
            double head = 0.0, sign = 1.0, fact = 2.0;
            for (int p = 2; p <= 20; p += 2) {
                head += sign * std::pow(eps, p - beta) / (fact * (p - beta));
                sign = -sign;
                fact *= (p + 1.0) * (p + 2.0);
            }
            const double mid = adaptive_simpson(
                [&](double v) { return (1.0 - std::cos(v)) * std::pow(v, -1.0 - beta); },
                eps, X, 1e-12);
            const double tail = std::pow(X, -beta) / beta +
                                std::sin(X) * std::pow(X, -1.0 - beta) -
                                (1.0 + beta) * std::cos(X) * std::pow(X, -2.0 - beta);
            return {-2.0 * coeff * std::pow(std::abs(u), beta) * (head + mid + tail), 0.0};
        }
    }
    return {0.0, 0.0};
}

inline std::complex<double> theta_quad(double u, const tcvol::LevyTriplet& t) {
    const std::complex<double> i(0.0, 1.0);
    return i * t.drift * u - 0.5 * t.vol * u * u + theta_jump_quad(u, t.jumps);
}

}  // namespace testkit
