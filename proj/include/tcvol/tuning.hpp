#pragma once

#include <vector>

#include "tcvol/model.hpp"
#include "tcvol/smoothing.hpp"

namespace tcvol {

struct TuneParams {
    double u = 1.0;
    double h1 = 1.0;
    double h2 = 1.0;
    double h = 0.3;
};

struct TuneGrid {
    std::vector<double> u_candidates;
    std::vector<double> h1_candidates;
    std::vector<double> h2_candidates;
    std::vector<double> h_candidates;

    void validate() const;
};

struct TuneEntry {
    TuneParams params;
    double score = 0.0;  // +inf marks an infeasible candidate
};

struct TuneResult {
    TuneParams best;
    double score = 0.0;
    std::vector<TuneEntry> table;
};

// Generalised cross-validation of the normalised curve at the design points:
//   GCV = mean_l (rtilde_{l/n2} - rhat_l)^2 / (mean_l W_l(l/n2))^2.
// Any failing stage (infeasible layout, degenerate normalisation, bandwidth
// too small) yields the +inf sentinel instead of an error.
double gcv_score(const ObservationSeries& series, const TuneParams& params,
                 const SmoothingConfig& base, double floor = 1e-6);

// Exhaustive evaluation over the Cartesian grid. Ties are broken towards
// smaller h, then smaller u, then h1, then h2. Throws config_error when every
// candidate is infeasible.
TuneResult tune(const ObservationSeries& series, const TuneGrid& grid,
                const SmoothingConfig& base, double floor = 1e-6);

// Robust scale of the pre-averaged increments, median |xhat| / 0.6745;
// frequency defaults adapt to the price scale through it.
double robust_scale(const ObservationSeries& series, double h1, double h2);

// Default grid: u in {0.5, 1, 2, 4} / robust scale, h1 = h2 in {0.5, 1, 2},
// h in {0.05, 0.1, 0.2, 0.4}. The scale is computed on the given layout.
TuneGrid default_tune_grid(const ObservationSeries& series, double scale_h1 = 0.125,
                           double scale_h2 = 1.0);

}  // namespace tcvol
