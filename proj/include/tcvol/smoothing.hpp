#pragma once

#include <span>
#include <vector>

#include "tcvol/charfn.hpp"

namespace tcvol {

// Beta(k, k) kernels rescaled to [-1, 1], k = 1, 2, 3.
enum class Kernel { Uniform, Epanechnikov, Biweight };

double kernel_value(Kernel kernel, double x);

struct SmoothingConfig {
    Kernel kernel = Kernel::Epanechnikov;
    int order = 1;           // N; degree N-1 local polynomial. N = 1 is Nadaraya-Watson.
    double bandwidth = 0.3;  // h in (0, 1]
    double ridge = 0.0;      // optional extra regulariser added to V_n(t)

    void validate() const;
};

// Local polynomial weights at query time t over the design points l/n2:
//   W_l(t) = (1/(n2 h)) K(lambda_l) U(0)^T V_n(t)^{-1} U(lambda_l),
// lambda_l = (t - l/n2)/h, U(x) = (1, x, ..., x^{N-1}/(N-1)!)^T,
// V_n(t) = (1/(n2 h)) sum_l K(lambda_l) U U^T.
// When V_n(t) is numerically singular (condition estimate > 1e12) a ridge of
// 1e-10 trace(V)/N is added and the result is flagged.
struct WeightInfo {
    std::vector<double> w;
    bool ridged = false;
};

WeightInfo lp_weights(double t, int n2, const SmoothingConfig& cfg);

// Smoothed curves on a query grid. r_tilde and denom are filled only by
// normalise_rate.
struct CurveEstimate {
    std::vector<double> grid;
    std::vector<double> c_tilde;
    std::vector<double> r_tilde;
    double denom = 0.0;
    bool ridged = false;
};

// c_tilde(t) = sum_l W_l(t) chat_l at every grid point; grid must lie in [0, 1].
CurveEstimate smooth_curve(const LocalEstimates& local, const SmoothingConfig& cfg,
                           std::span<const double> grid);

// Adds the normalised curve r_tilde = c_tilde / mean(chat). Throws
// degeneracy_error when mean(chat) <= 0.
CurveEstimate normalise_rate(const LocalEstimates& local, const SmoothingConfig& cfg,
                             std::span<const double> grid);

// Normalised local estimates rhat_l = chat_l / mean(chat); averages to one.
std::vector<double> normalised_local(const LocalEstimates& local);

// Default query grid: the n2 design midpoints plus the endpoints 0 and 1.
std::vector<double> default_query_grid(int n2);

}  // namespace tcvol
