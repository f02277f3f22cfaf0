#pragma once

#include <complex>

#include "tcvol/model.hpp"
#include "tcvol/preaverage.hpp"

namespace tcvol {

// Mean jump size restricted to |x| < 1 under the compound-Poisson size
// distribution (the truncation term of the Levy-Khintchine compensator).
double cp_truncated_mean(const JumpSpec& jumps);

// J(beta) = int_0^inf (1 - cos v) v^{-1-beta} dv, closed form.
double stable_cos_integral(double beta);

// Coefficient of the stable Levy density nu(dx) = coeff * |x|^{-1-beta} dx,
// chosen so the jump part of the exponent is -scale^beta |u|^beta.
double stable_density_coeff(double beta, double scale);

// Spot characteristic exponent
//   theta(u) = i b u - c u^2 / 2 + int (e^{iux} - 1 - iux 1(|x|<1)) nu(dx),
// with the jump integral in closed form per jump kind.
std::complex<double> theta(double u, const LevyTriplet& triplet);

// Real part of the jump integral, int (cos(ux) - 1) nu(dx), evaluated by
// numerical quadrature with singularity splitting. Cross-check route for the
// closed forms used in theta / cu_adjust.
double theta_jump_real_quadrature(double u, const JumpSpec& jumps);

// Jump adjustment of the adjusted volatility process:
//   (1/(n0 u^2)) int_0^1 int (1 - cos(sqrt(n0) Phi(w) u x)) nu(dx) dw,
// with the inner integral in closed form and the outer integral on a 256-point
// composite Gauss-Legendre rule. Always >= 0.
double cu_adjust(double u, const JumpSpec& jumps, int n0);

// Same quantity via the generic two-level route: outer Gauss-Legendre in w,
// inner per-kind sum over atoms or adaptive quadrature in x.
double cu_adjust_generic(double u, const JumpSpec& jumps, int n0);

// Population quantities at (t, u) for a given model and bin layout:
//   psi = exp(-kappa sigma^2_t u^2),  phi = exp(-c_t(u) u^2) psi,
//   rho^2 = (1 + phi_t(2u))/2 - phi_t(u)^2,  tau^2 = rho^2 / (n1 phi^2),
// where c_t(u) = c_t + jump adjustment.
struct PopulationPoint {
    double c_u = 0.0;
    double phi = 1.0;
    double psi = 1.0;
    double rho2 = 0.0;
    double tau2 = 0.0;
};

PopulationPoint population(double t, double u, const ModelSpec& model,
                           const BinLayout& layout);

// Adjusted volatility target c_t(u) for a model; what the local estimates are
// asymptotically unbiased for. Testing/benchmark aid, not used by the estimator.
struct AdjustedVolPoint {
    double t = 0.0;
    double value = 0.0;
};

AdjustedVolPoint adjusted_vol_target(const ModelSpec& model, double u,
                                     const BinLayout& layout, double t);

// Rate exponents: a1 = min(1/4, 3a/8), a2 = a1/2 + 1/16,
// a3 = a/(2(2a+1)), a4 = min(a3, (2-b)/4).
struct RateExponents {
    double alpha1, alpha2, alpha3, alpha4;
};

RateExponents rate_exponents(double alpha, double beta);

}  // namespace tcvol
