#include "tcvol/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tcvol/errors.hpp"

namespace tcvol {

namespace {

template <typename F>
auto stage(const char* name, F&& f) {
    try {
        return f();
    } catch (const config_error& e) {
        throw config_error(std::string("estimate stage '") + name + "': " + e.what());
    } catch (const data_error& e) {
        throw data_error(std::string("estimate stage '") + name + "': " + e.what());
    }
}

}  // namespace

EstimateResult run_estimate(const ObservationSeries& series, const EstimateParams& params) {
    EstimateResult res;
    res.layout = stage("layout", [&] { return make_layout(series.n(), params.h1, params.h2); });
    const PreAveraged pre = stage("preaverage", [&] { return preaverage(series, res.layout); });

    double u = params.u;
    if (u == 0.0) {
        res.u_auto = true;
        double scale = 0.0;
        {
            std::vector<double> mags(pre.xhat.size());
            for (std::size_t k = 0; k < mags.size(); ++k) mags[k] = std::abs(pre.xhat[k]);
            std::sort(mags.begin(), mags.end());
            const std::size_t m = mags.size();
            const double med =
                (m % 2 == 1) ? mags[m / 2] : 0.5 * (mags[m / 2 - 1] + mags[m / 2]);
            scale = med / 0.6745;
        }
        // Constant series have zero scale; any frequency gives the same
        // degenerate zero estimate, so fall back to one.
        u = scale > 0.0 ? params.u_mult / scale : 1.0;
    }
    res.u_used = u;

    res.local = stage("spot_vol", [&] { return spot_vol(pre, u, params.floor); });

    SmoothingConfig cfg;
    cfg.kernel = params.kernel;
    cfg.order = params.order;

    double h = params.h;
    if (h == 0.0) {
        res.h_auto = true;
        double best = std::numeric_limits<double>::infinity();
        double best_h = 0.0;
        for (double hc : params.h_grid) {
            TuneParams tp{u, params.h1, params.h2, hc};
            const double score = gcv_score(series, tp, cfg, params.floor);
            if (score < best || (score == best && hc < best_h)) {
                best = score;
                best_h = hc;
            }
        }
        if (!std::isfinite(best))
            throw config_error("estimate stage 'bandwidth selection': no feasible h candidate");
        h = best_h;
    }
    res.h_used = h;
    cfg.bandwidth = h;

    const std::vector<double> grid =
        params.grid.empty() ? default_query_grid(res.layout.n2) : params.grid;

    try {
        res.curve = stage("smoothing", [&] { return normalise_rate(res.local, cfg, grid); });
    } catch (const degeneracy_error&) {
        res.degenerate = true;
        res.curve = stage("smoothing", [&] { return smooth_curve(res.local, cfg, grid); });
    }
    return res;
}

}  // namespace tcvol
