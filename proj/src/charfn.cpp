#include "tcvol/charfn.hpp"

#include <cmath>

#include "tcvol/errors.hpp"

namespace tcvol {

double LocalEstimates::guard_fraction() const {
    if (guard_ok.empty()) return 1.0;
    double ok = 0.0;
    for (char g : guard_ok) ok += g ? 1.0 : 0.0;
    return ok / static_cast<double>(guard_ok.size());
}

void local_charfn(const PreAveraged& pre, double u, std::vector<double>& phi,
                  std::vector<double>& phi2u) {
    const int n1 = pre.layout.n1;
    const int n2 = pre.layout.n2;
    // cos is even, so computing at |u| makes the +-u symmetry exact in
    // floating point as well.
    const double ua = std::abs(u);
    phi.assign(n2, 0.0);
    phi2u.assign(n2, 0.0);
    for (int l = 0; l < n2; ++l) {
        double s1 = 0.0, s2 = 0.0;
        for (int k = l * n1; k < (l + 1) * n1; ++k) {
            s1 += std::cos(ua * pre.xhat[k]);
            s2 += std::cos(2.0 * ua * pre.xhat[k]);
        }
        phi[l] = s1 / n1;
        phi2u[l] = s2 / n1;
    }
}

std::vector<double> local_noise_cf(const PreAveraged& pre, double u) {
    const int n1 = pre.layout.n1;
    const int n2 = pre.layout.n2;
    const double ku2 = pre.layout.kappa * u * u;
    std::vector<double> psi(n2, 0.0);
    for (int l = 0; l < n2; ++l) {
        double s = 0.0;
        for (int k = l * n1; k < (l + 1) * n1; ++k)
            s += std::exp(-ku2 * pre.sigma2hat[k]);
        psi[l] = s / n1;
    }
    return psi;
}

double bias_correction(double phi_l, double phi2u_l, int n1) {
    return ((1.0 + phi2u_l) / (2.0 * phi_l * phi_l) - 1.0) / n1;
}

LocalEstimates spot_vol(const PreAveraged& pre, double u, double floor) {
    if (u == 0.0) throw config_error("spot_vol: frequency must be nonzero");
    if (!(floor > 0.0 && floor < 1.0))
        throw config_error("spot_vol: floor must lie in (0, 1)");

    LocalEstimates est;
    est.u = u;
    est.floor = floor;
    est.layout = pre.layout;
    local_charfn(pre, u, est.phi, est.phi2u);
    est.psi = local_noise_cf(pre, u);

    const int n2 = pre.layout.n2;
    const double u2 = u * u;
    est.tau2.resize(n2);
    est.chat.resize(n2);
    est.guard_ok.resize(n2);
    for (int l = 0; l < n2; ++l) {
        est.guard_ok[l] = (est.phi[l] >= floor && est.psi[l] >= floor) ? 1 : 0;
        const double phic = std::max(std::abs(est.phi[l]), floor);
        const double psic = std::max(est.psi[l], floor);
        est.tau2[l] = bias_correction(phic, est.phi2u[l], pre.layout.n1);
        est.chat[l] = -(std::log(phic / psic) + 0.5 * est.tau2[l]) / u2;
    }
    return est;
}

}  // namespace tcvol
