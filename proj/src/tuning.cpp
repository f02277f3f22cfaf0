#include "tcvol/tuning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tcvol/errors.hpp"
#include "tcvol/preaverage.hpp"

namespace tcvol {

void TuneGrid::validate() const {
    auto check = [](const std::vector<double>& v, const char* name) {
        if (v.empty()) throw config_error(std::string("TuneGrid: empty ") + name + " grid");
        for (double x : v)
            if (!(x > 0.0))
                throw config_error(std::string("TuneGrid: ") + name +
                                   " candidates must be > 0");
    };
    check(u_candidates, "u");
    check(h1_candidates, "h1");
    check(h2_candidates, "h2");
    check(h_candidates, "h");
}

double gcv_score(const ObservationSeries& series, const TuneParams& params,
                 const SmoothingConfig& base, double floor) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    try {
        const BinLayout layout = make_layout(series.n(), params.h1, params.h2);
        const PreAveraged pre = preaverage(series, layout);
        const LocalEstimates local = spot_vol(pre, params.u, floor);
        const std::vector<double> rhat = normalised_local(local);

        SmoothingConfig cfg = base;
        cfg.bandwidth = params.h;

        const int n2 = layout.n2;
        double num = 0.0, self = 0.0;
        for (int l = 0; l < n2; ++l) {
            const double tl = static_cast<double>(l) / n2;
            const WeightInfo wi = lp_weights(tl, n2, cfg);
            double rt = 0.0;
            for (int m = 0; m < n2; ++m) rt += wi.w[m] * rhat[m];
            const double d = rt - rhat[l];
            num += d * d;
            self += wi.w[l];
        }
        num /= n2;
        self /= n2;
        const double score = num / (self * self);
        return std::isfinite(score) ? score : inf;
    } catch (const config_error&) {
        return inf;
    } catch (const degeneracy_error&) {
        return inf;
    }
}

TuneResult tune(const ObservationSeries& series, const TuneGrid& grid,
                const SmoothingConfig& base, double floor) {
    grid.validate();
    constexpr double inf = std::numeric_limits<double>::infinity();

    TuneResult result;
    result.score = inf;
    bool have_best = false;

    // Tie-break order: smaller h, then u, then h1, then h2.
    auto better = [](double score, const TuneParams& p, double best_score,
                     const TuneParams& best) {
        if (score != best_score) return score < best_score;
        if (p.h != best.h) return p.h < best.h;
        if (p.u != best.u) return p.u < best.u;
        if (p.h1 != best.h1) return p.h1 < best.h1;
        return p.h2 < best.h2;
    };

    for (double u : grid.u_candidates)
        for (double h1 : grid.h1_candidates)
            for (double h2 : grid.h2_candidates)
                for (double h : grid.h_candidates) {
                    TuneParams p{u, h1, h2, h};
                    const double score = gcv_score(series, p, base, floor);
                    result.table.push_back({p, score});
                    if (!std::isfinite(score)) continue;
                    if (!have_best || better(score, p, result.score, result.best)) {
                        result.best = p;
                        result.score = score;
                        have_best = true;
                    }
                }
    if (!have_best) throw config_error("tune: no feasible tuning point");
    return result;
}

double robust_scale(const ObservationSeries& series, double h1, double h2) {
    const BinLayout layout = make_layout(series.n(), h1, h2);
    const PreAveraged pre = preaverage(series, layout);
    std::vector<double> mags(pre.xhat.size());
    for (std::size_t k = 0; k < mags.size(); ++k) mags[k] = std::abs(pre.xhat[k]);
    std::sort(mags.begin(), mags.end());
    const std::size_t m = mags.size();
    const double med = (m % 2 == 1) ? mags[m / 2] : 0.5 * (mags[m / 2 - 1] + mags[m / 2]);
    return med / 0.6745;
}

TuneGrid default_tune_grid(const ObservationSeries& series, double scale_h1,
                           double scale_h2) {
    const double scale = robust_scale(series, scale_h1, scale_h2);
    if (!(scale > 0.0))
        throw config_error("default_tune_grid: degenerate series, zero price scale");
    TuneGrid grid;
    for (double m : {0.5, 1.0, 2.0, 4.0}) grid.u_candidates.push_back(m / scale);
    grid.h1_candidates = {0.5, 1.0, 2.0};
    grid.h2_candidates = {0.5, 1.0, 2.0};
    grid.h_candidates = {0.05, 0.1, 0.2, 0.4};
    return grid;
}

}  // namespace tcvol
