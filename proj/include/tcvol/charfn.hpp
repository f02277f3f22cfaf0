#pragma once

#include <vector>

#include "tcvol/preaverage.hpp"

namespace tcvol {

// Per-coarse-bin estimates at frequency u. phi/psi are raw (unclamped) values;
// chat is assembled from floor-clamped copies so it is always finite. guard_ok
// flags bins where both raw phi and psi clear the floor.
struct LocalEstimates {
    double u = 0.0;
    double floor = 1e-6;
    std::vector<double> phi;       // in [-1, 1]
    std::vector<double> phi2u;     // phi evaluated at 2u
    std::vector<double> psi;       // in (0, 1]
    std::vector<double> tau2;      // bias-correction terms
    std::vector<double> chat;      // local volatility estimates
    std::vector<char> guard_ok;
    BinLayout layout;

    double guard_fraction() const;  // fraction of bins with guard_ok
};

// phi_l(u) = (1/n1) sum_{k in K_l} cos(u xhat_k), and the same at 2u.
// K_l = [l n1, (l+1) n1).
void local_charfn(const PreAveraged& pre, double u, std::vector<double>& phi,
                  std::vector<double>& phi2u);

// psi_l(u) = (1/n1) sum_{k in K_l} exp(-kappa u^2 sigma2hat_k); in (0, 1].
std::vector<double> local_noise_cf(const PreAveraged& pre, double u);

// tau2_l(u) = (1/n1) ((1 + phi_l(2u)) / (2 phi_l(u)^2) - 1).
// phi_l must already be clamped away from zero.
double bias_correction(double phi_l, double phi2u_l, int n1);

// Bias-corrected local volatility estimates
//   chat_l(u) = -(1/u^2) (log |phi_l(u) / psi_l(u)| + tau2_l(u) / 2),
// with |phi| and psi clamped at `floor` before logs and before the bias
// correction. Negative chat values are kept; smoothing averages them out.
LocalEstimates spot_vol(const PreAveraged& pre, double u, double floor = 1e-6);

}  // namespace tcvol
