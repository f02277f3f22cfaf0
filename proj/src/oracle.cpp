#include "tcvol/oracle.hpp"

#include <cmath>

#include "tcvol/errors.hpp"
#include "tcvol/quadrature.hpp"

namespace tcvol {

namespace {

constexpr double kPi = 3.14159265358979323846;

double norm_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * kPi); }
double norm_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Full-period sine scaling function Phi(w) = 2 sin(2 pi w).
double phi_weight(double w) { return 2.0 * std::sin(2.0 * kPi * w); }

// int (1 - cos(a x)) nu(dx) for the supported jump measures, closed form.
double one_minus_cos_levy(double a, const JumpSpec& j) {
    switch (j.kind) {
        case JumpKind::None:
            return 0.0;
        case JumpKind::CompoundPoisson:
            if (j.size_kind == JumpSizeKind::TwoPoint) {
                // cos is even, so the +-size mixture collapses regardless of prob.
                return j.intensity * (1.0 - std::cos(a * j.size));
            } else {
                const double s = j.size_sd, m = j.size_mean;
                return j.intensity * (1.0 - std::exp(-0.5 * a * a * s * s) * std::cos(a * m));
            }
        case JumpKind::SymmetricStable:
            return std::pow(j.scale, j.index) * std::pow(std::abs(a), j.index);
    }
    return 0.0;
}

}  // namespace

double cp_truncated_mean(const JumpSpec& jumps) {
    if (jumps.kind != JumpKind::CompoundPoisson) return 0.0;
    if (jumps.size_kind == JumpSizeKind::TwoPoint) {
        if (std::abs(jumps.size) >= 1.0) return 0.0;
        return (2.0 * jumps.prob - 1.0) * jumps.size;
    }
    const double m = jumps.size_mean, s = jumps.size_sd;
    if (s == 0.0) return std::abs(m) < 1.0 ? m : 0.0;
    const double zl = (-1.0 - m) / s, zu = (1.0 - m) / s;
    return m * (norm_cdf(zu) - norm_cdf(zl)) - s * (norm_pdf(zu) - norm_pdf(zl));
}

double stable_cos_integral(double beta) {
    if (!(beta > 0.0 && beta < 2.0))
        throw config_error("stable_cos_integral: index must lie in (0, 2)");
    if (std::abs(beta - 1.0) < 1e-12) return kPi / 2.0;
    return std::tgamma(2.0 - beta) * std::cos(kPi * beta / 2.0) / (beta * (1.0 - beta));
}

double stable_density_coeff(double beta, double scale) {
    return std::pow(scale, beta) / (2.0 * stable_cos_integral(beta));
}

std::complex<double> theta(double u, const LevyTriplet& triplet) {
    const std::complex<double> i(0.0, 1.0);
    std::complex<double> value = i * triplet.drift * u - 0.5 * triplet.vol * u * u;
    const JumpSpec& j = triplet.jumps;
    switch (j.kind) {
        case JumpKind::None:
            break;
        case JumpKind::CompoundPoisson:
            if (j.size_kind == JumpSizeKind::TwoPoint) {
                const std::complex<double> up = std::exp(i * u * j.size) - 1.0;
                const std::complex<double> dn = std::exp(-i * u * j.size) - 1.0;
                value += j.intensity * (j.prob * up + (1.0 - j.prob) * dn);
            } else {
                const double m = j.size_mean, s = j.size_sd;
                value += j.intensity *
                         (std::exp(i * u * m - 0.5 * u * u * s * s) - 1.0);
            }
            value -= i * u * j.intensity * cp_truncated_mean(j);
            break;
        case JumpKind::SymmetricStable:
            // Symmetric measure: the truncation term vanishes and the exponent
            // is real, -scale^beta |u|^beta.
            value -= std::pow(j.scale, j.index) * std::pow(std::abs(u), j.index);
            break;
    }
    return value;
}

namespace {

// int_0^inf (1 - cos v) v^{-1-beta} dv by quadrature: term-wise series of
// 1 - cos below eps (factorially convergent there), adaptive Simpson on
// [eps, X], analytic oscillatory tail beyond X.
double stable_cos_integral_quad(double beta) {
    const double eps = 1.0, X = 400.0;
    double head = 0.0;
    // 1 - cos v = v^2/2 - v^4/24 + v^6/720 - v^8/40320 + ...
    double sign = 1.0, fact = 2.0;
    for (int p = 2; p <= 20; p += 2) {
        head += sign * std::pow(eps, p - beta) / (fact * (p - beta));
        sign = -sign;
        fact *= (p + 1.0) * (p + 2.0);
    }
    const double mid = adaptive_simpson(
        [beta](double v) { return (1.0 - std::cos(v)) * std::pow(v, -1.0 - beta); }, eps,
        X, 1e-12);
    const double tail = std::pow(X, -beta) / beta + std::sin(X) * std::pow(X, -1.0 - beta) -
                        (1.0 + beta) * std::cos(X) * std::pow(X, -2.0 - beta);
    return head + mid + tail;
}

}  // namespace

double theta_jump_real_quadrature(double u, const JumpSpec& jumps) {
    switch (jumps.kind) {
        case JumpKind::None:
            return 0.0;
        case JumpKind::CompoundPoisson: {
            if (jumps.size_kind == JumpSizeKind::TwoPoint) {
                // Point masses: the "quadrature" is the exact atom sum.
                const double up = std::cos(u * jumps.size) - 1.0;
                const double dn = std::cos(-u * jumps.size) - 1.0;
                return jumps.intensity * (jumps.prob * up + (1.0 - jumps.prob) * dn);
            }
            const double m = jumps.size_mean, s = jumps.size_sd;
            auto f = [&](double x) {
                return (std::cos(u * x) - 1.0) * norm_pdf((x - m) / s) / s;
            };
            return jumps.intensity *
                   adaptive_simpson(f, m - 10.0 * s, m + 10.0 * s, 1e-13);
        }
        case JumpKind::SymmetricStable: {
            const double coeff = stable_density_coeff(jumps.index, jumps.scale);
            // Substituting v = |u| x reduces to the universal integral J(beta).
            return -2.0 * coeff * std::pow(std::abs(u), jumps.index) *
                   stable_cos_integral_quad(jumps.index);
        }
    }
    return 0.0;
}

double cu_adjust(double u, const JumpSpec& jumps, int n0) {
    if (u == 0.0) throw config_error("cu_adjust: frequency must be nonzero");
    if (jumps.kind == JumpKind::None) return 0.0;
    const double rn0 = std::sqrt(static_cast<double>(n0));
    const double outer = integrate_gl(
        [&](double w) { return one_minus_cos_levy(rn0 * phi_weight(w) * u, jumps); }, 0.0,
        1.0, 16, 16);
    return outer / (n0 * u * u);
}

double cu_adjust_generic(double u, const JumpSpec& jumps, int n0) {
    if (u == 0.0) throw config_error("cu_adjust_generic: frequency must be nonzero");
    if (jumps.kind == JumpKind::None) return 0.0;
    const double rn0 = std::sqrt(static_cast<double>(n0));

    auto inner = [&](double a) -> double {
        switch (jumps.kind) {
            case JumpKind::None:
                return 0.0;
            case JumpKind::CompoundPoisson:
                if (jumps.size_kind == JumpSizeKind::TwoPoint) {
                    return jumps.intensity *
                           (jumps.prob * (1.0 - std::cos(a * jumps.size)) +
                            (1.0 - jumps.prob) * (1.0 - std::cos(-a * jumps.size)));
                } else {
                    const double m = jumps.size_mean, s = jumps.size_sd;
                    auto f = [&](double x) {
                        return (1.0 - std::cos(a * x)) * norm_pdf((x - m) / s) / s;
                    };
                    return jumps.intensity *
                           adaptive_simpson(f, m - 10.0 * s, m + 10.0 * s, 1e-13);
                }
            case JumpKind::SymmetricStable: {
                const double coeff = stable_density_coeff(jumps.index, jumps.scale);
                return 2.0 * coeff * std::pow(std::abs(a), jumps.index) *
                       stable_cos_integral_quad(jumps.index);
            }
        }
        return 0.0;
    };

    const double outer =
        integrate_gl([&](double w) { return inner(rn0 * phi_weight(w) * u); }, 0.0, 1.0,
                     16, 16);
    return outer / (n0 * u * u);
}

PopulationPoint population(double t, double u, const ModelSpec& model,
                           const BinLayout& layout) {
    PopulationPoint p;
    if (u == 0.0) return p;  // phi = psi = 1, rho2 = tau2 = 0 exactly
    const double sigma2 = model.noise.sigma2_at(t);
    const double c_t = model.spot_vol_at(t);
    const double jump_factor = model.jump_rate_factor(t);

    const double adj_u = jump_factor * cu_adjust(u, model.triplet.jumps, layout.n0);
    const double adj_2u = jump_factor * cu_adjust(2.0 * u, model.triplet.jumps, layout.n0);
    p.c_u = c_t + adj_u;
    const double c_2u = c_t + adj_2u;

    p.psi = std::exp(-layout.kappa * sigma2 * u * u);
    p.phi = std::exp(-p.c_u * u * u) * p.psi;
    const double psi_2u = std::exp(-layout.kappa * sigma2 * 4.0 * u * u);
    const double phi_2u = std::exp(-c_2u * 4.0 * u * u) * psi_2u;
    p.rho2 = 0.5 * (1.0 + phi_2u) - p.phi * p.phi;
    p.tau2 = p.rho2 / (layout.n1 * p.phi * p.phi);
    return p;
}

AdjustedVolPoint adjusted_vol_target(const ModelSpec& model, double u,
                                     const BinLayout& layout, double t) {
    AdjustedVolPoint out;
    out.t = t;
    if (u == 0.0) throw config_error("adjusted_vol_target: frequency must be nonzero");
    out.value = model.spot_vol_at(t) +
                model.jump_rate_factor(t) * cu_adjust(u, model.triplet.jumps, layout.n0);
    return out;
}

RateExponents rate_exponents(double alpha, double beta) {
    if (!(alpha >= 0.5)) throw config_error("rate_exponents: alpha must be >= 1/2");
    if (!(beta >= 0.0 && beta <= 2.0))
        throw config_error("rate_exponents: beta must lie in [0, 2]");
    RateExponents e{};
    e.alpha1 = std::min(0.25, 3.0 * alpha / 8.0);
    e.alpha2 = 0.5 * e.alpha1 + 1.0 / 16.0;
    e.alpha3 = alpha / (2.0 * (2.0 * alpha + 1.0));
    e.alpha4 = std::min(e.alpha3, (2.0 - beta) / 4.0);
    return e;
}

}  // namespace tcvol
