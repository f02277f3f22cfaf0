#include "tcvol/smoothing.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "tcvol/errors.hpp"

namespace tcvol {

double kernel_value(Kernel kernel, double x) {
    const double ax = std::abs(x);
    if (ax > 1.0) return 0.0;
    switch (kernel) {
        case Kernel::Uniform:
            return 0.5;
        case Kernel::Epanechnikov:
            return 0.75 * (1.0 - x * x);
        case Kernel::Biweight: {
            const double q = 1.0 - x * x;
            return 15.0 / 16.0 * q * q;
        }
    }
    return 0.0;
}

void SmoothingConfig::validate() const {
    if (!(bandwidth > 0.0 && bandwidth <= 1.0))
        throw config_error("SmoothingConfig: bandwidth must lie in (0, 1]");
    if (order < 1) throw config_error("SmoothingConfig: order must be >= 1");
    if (!(ridge >= 0.0)) throw config_error("SmoothingConfig: ridge must be >= 0");
}

WeightInfo lp_weights(double t, int n2, const SmoothingConfig& cfg) {
    cfg.validate();
    if (n2 < 1) throw config_error("lp_weights: n2 must be >= 1");
    const int N = cfg.order;
    const double h = cfg.bandwidth;

    int in_window = 0;
    for (int l = 0; l < n2; ++l)
        if (std::abs(t - static_cast<double>(l) / n2) <= h) ++in_window;
    if (in_window < N) {
        std::ostringstream os;
        os << "lp_weights: bandwidth too small, " << in_window << " design points within "
           << "h = " << h << " of t = " << t << " but order " << N << " requires " << N;
        throw config_error(os.str());
    }

    // Basis U(x) = (1, x, x^2/2!, ..., x^{N-1}/(N-1)!).
    auto basis = [N](double x) {
        Eigen::VectorXd u(N);
        double term = 1.0;
        u(0) = 1.0;
        for (int p = 1; p < N; ++p) {
            term *= x / p;
            u(p) = term;
        }
        return u;
    };

    std::vector<double> kvals(n2), lams(n2);
    Eigen::MatrixXd V = Eigen::MatrixXd::Zero(N, N);
    for (int l = 0; l < n2; ++l) {
        const double lam = (t - static_cast<double>(l) / n2) / h;
        lams[l] = lam;
        kvals[l] = kernel_value(cfg.kernel, lam);
        if (kvals[l] == 0.0) continue;
        const Eigen::VectorXd u = basis(lam);
        V.noalias() += kvals[l] * u * u.transpose();
    }
    V /= static_cast<double>(n2) * h;
    if (cfg.ridge > 0.0) V.diagonal().array() += cfg.ridge;

    WeightInfo out;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(V);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(N - 1);
    if (!(smin > 0.0) || smax / smin > 1e12) {
        V.diagonal().array() += 1e-10 * V.trace() / N;
        out.ridged = true;
    }

    Eigen::VectorXd e0 = Eigen::VectorXd::Zero(N);
    e0(0) = 1.0;
    const Eigen::VectorXd g = V.fullPivLu().solve(e0);

    out.w.assign(n2, 0.0);
    const double scale = 1.0 / (static_cast<double>(n2) * h);
    for (int l = 0; l < n2; ++l) {
        if (kvals[l] == 0.0) continue;
        out.w[l] = scale * kvals[l] * g.dot(basis(lams[l]));
    }
    return out;
}

namespace {

CurveEstimate smooth_impl(const LocalEstimates& local, const SmoothingConfig& cfg,
                          std::span<const double> grid) {
    const int n2 = local.layout.n2;
    CurveEstimate out;
    out.grid.assign(grid.begin(), grid.end());
    out.c_tilde.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        if (!(t >= 0.0 && t <= 1.0))
            throw config_error("smooth_curve: query grid must lie in [0, 1]");
        const WeightInfo wi = lp_weights(t, n2, cfg);
        out.ridged = out.ridged || wi.ridged;
        double acc = 0.0;
        for (int l = 0; l < n2; ++l) acc += wi.w[l] * local.chat[l];
        out.c_tilde[i] = acc;
    }
    return out;
}

double chat_mean(const LocalEstimates& local) {
    double s = 0.0;
    for (double c : local.chat) s += c;
    return s / static_cast<double>(local.chat.size());
}

}  // namespace

CurveEstimate smooth_curve(const LocalEstimates& local, const SmoothingConfig& cfg,
                           std::span<const double> grid) {
    return smooth_impl(local, cfg, grid);
}

CurveEstimate normalise_rate(const LocalEstimates& local, const SmoothingConfig& cfg,
                             std::span<const double> grid) {
    CurveEstimate out = smooth_impl(local, cfg, grid);
    const double denom = chat_mean(local);
    if (!(denom > 0.0))
        throw degeneracy_error("normalise_rate: degenerate normalisation, mean local "
                               "volatility is not positive");
    out.denom = denom;
    out.r_tilde.resize(out.c_tilde.size());
    for (std::size_t i = 0; i < out.c_tilde.size(); ++i)
        out.r_tilde[i] = out.c_tilde[i] / denom;
    return out;
}

std::vector<double> normalised_local(const LocalEstimates& local) {
    const double denom = chat_mean(local);
    if (!(denom > 0.0))
        throw degeneracy_error("normalised_local: degenerate normalisation, mean local "
                               "volatility is not positive");
    std::vector<double> rhat(local.chat.size());
    for (std::size_t l = 0; l < rhat.size(); ++l) rhat[l] = local.chat[l] / denom;
    return rhat;
}

std::vector<double> default_query_grid(int n2) {
    std::vector<double> grid;
    grid.reserve(n2 + 2);
    grid.push_back(0.0);
    for (int l = 0; l < n2; ++l) grid.push_back((l + 0.5) / n2);
    grid.push_back(1.0);
    return grid;
}

}  // namespace tcvol
