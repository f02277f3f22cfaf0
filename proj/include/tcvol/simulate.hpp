#pragma once

#include <cstdint>
#include <vector>

#include "tcvol/model.hpp"

namespace tcvol {

// Observations Y_j = L_{R_{j/n}} + eps_j from a time-changed Levy process.
// Levy increments over [R_{j/n}, R_{(j+1)/n}] are drawn exactly: Gaussian part
// with variance vol * dR, compound Poisson counts with mean intensity * dR
// (compensated for jumps below one in absolute size), and stable increments
// with scale * dR^{1/index}. Ground truth r, c and X are stored on the fine
// grid j/n. Deterministic given the seed.
ObservationSeries simulate_tc_levy(const LevyTriplet& triplet, const RateSpec& rate,
                                   const NoiseSpec& noise, int n, std::uint64_t seed);

// Ito-semimartingale simulation with drift and volatility paths sampled on a
// uniform grid (size >= 2; linear interpolation in between, so the grid should
// be at least as fine as the estimator's coarse bins). Gaussian increments use
// the exact trapezoid integral of the volatility path over each step. Jumps,
// when configured, are idiosyncratic: their intensity is constant in time, so
// the separability of the time-changed model is deliberately violated.
struct ItoPathSpec {
    std::vector<double> drift;  // may be empty (zero drift)
    std::vector<double> vol;    // strictly positive, size >= 2
    JumpSpec jumps;
};

ObservationSeries simulate_ito_sm(const ItoPathSpec& paths, const NoiseSpec& noise,
                                  int n, std::uint64_t seed);

}  // namespace tcvol
