#pragma once

#include <vector>

#include "tcvol/model.hpp"

namespace tcvol {

// Bin layout: n observations, n0 = n1 * n2 pre-averaging bins, n2 coarse bins
// of n1 pre-averaged values each, and the noise constant kappa = 4 pi^2 n0^2 / n.
struct BinLayout {
    int n = 0;
    double h1 = 1.0;
    double h2 = 1.0;
    int n1 = 0;
    int n2 = 0;
    int n0 = 0;
    double kappa = 0.0;
};

// n_m = max(1, round(h_m^{-1} n^{(2m-1)/8})). Fails ("bins too fine") when
// n0 > n/2, i.e. when some pre-averaging bin would hold fewer than two
// observation indices.
BinLayout make_layout(int n, double h1, double h2);

// Scaling weight p_j = sqrt(n0) * 2 sin(2 pi n0 j / n).
double scaling_weight(int j, const BinLayout& layout);

struct PreAveraged {
    std::vector<double> xhat;       // pre-averaged increments, one per bin
    std::vector<double> sigma2hat;  // local noise-variance estimates, >= 0
    BinLayout layout;
};

// Pre-averaged increments and noise estimates over the index sets
// J_k = [k n/n0, (k+1) n/n0) intersected with the integers:
//   xhat_k   = sum_{j, j+1 in J_k} p_j (Y_{j+1} - Y_j)
//   sigma2_k = (n0 / 2n) sum_{j, j+1 in J_k} (Y_{j+1} - Y_j)^2
PreAveraged preaverage(const ObservationSeries& series, const BinLayout& layout);

}  // namespace tcvol
