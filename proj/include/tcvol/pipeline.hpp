#pragma once

#include <vector>

#include "tcvol/smoothing.hpp"
#include "tcvol/tuning.hpp"

namespace tcvol {

// Full estimation pipeline: layout -> pre-average -> local spot volatility ->
// smoothing -> normalisation. u = 0 selects the frequency automatically as
// u_mult / robust scale of the pre-averaged increments; h = 0 selects the
// smoothing bandwidth by GCV over h_grid with the other parameters fixed.
struct EstimateParams {
    double u = 0.0;
    double u_mult = 0.5;
    double h1 = 0.125;
    double h2 = 1.0;
    double h = 0.3;
    std::vector<double> h_grid = {0.05, 0.1, 0.2, 0.4};
    int order = 1;
    Kernel kernel = Kernel::Epanechnikov;
    double floor = 1e-6;
    std::vector<double> grid;  // empty: design midpoints plus endpoints
};

struct EstimateResult {
    BinLayout layout;
    LocalEstimates local;
    CurveEstimate curve;      // r_tilde empty when the normalisation is degenerate
    bool degenerate = false;  // mean local volatility was not positive
    double u_used = 0.0;
    double h_used = 0.0;
    bool u_auto = false;
    bool h_auto = false;
};

// Throws config_error / degeneracy_error with the failing stage named.
EstimateResult run_estimate(const ObservationSeries& series, const EstimateParams& params);

}  // namespace tcvol
