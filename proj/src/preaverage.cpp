#include "tcvol/preaverage.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "tcvol/errors.hpp"

namespace tcvol {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

BinLayout make_layout(int n, double h1, double h2) {
    if (n < 4) throw config_error("make_layout: n must be >= 4");
    if (!(h1 > 0.0) || !(h2 > 0.0))
        throw config_error("make_layout: bandwidths h1, h2 must be > 0");
    BinLayout layout;
    layout.n = n;
    layout.h1 = h1;
    layout.h2 = h2;
    const double nd = static_cast<double>(n);
    layout.n1 = std::max(1, static_cast<int>(std::lround(std::pow(nd, 1.0 / 8.0) / h1)));
    layout.n2 = std::max(1, static_cast<int>(std::lround(std::pow(nd, 3.0 / 8.0) / h2)));
    layout.n0 = layout.n1 * layout.n2;
    if (2 * static_cast<std::int64_t>(layout.n0) > n) {
        std::ostringstream os;
        os << "make_layout: bins too fine, n0 = " << layout.n0 << " > n/2 for n = " << n
           << ", h1 = " << h1 << ", h2 = " << h2;
        throw config_error(os.str());
    }
    layout.kappa = 4.0 * kPi * kPi * static_cast<double>(layout.n0) * layout.n0 / nd;
    return layout;
}

double scaling_weight(int j, const BinLayout& layout) {
    return std::sqrt(static_cast<double>(layout.n0)) * 2.0 *
           std::sin(2.0 * kPi * layout.n0 * static_cast<double>(j) / layout.n);
}

PreAveraged preaverage(const ObservationSeries& series, const BinLayout& layout) {
    const int n = layout.n;
    if (series.n() != n)
        throw config_error("preaverage: series length does not match layout");
    const int n0 = layout.n0;

    PreAveraged out;
    out.layout = layout;
    out.xhat.assign(n0, 0.0);
    out.sigma2hat.assign(n0, 0.0);
    std::vector<int> pairs(n0, 0);

    // j is in bin floor(j * n0 / n); the pair (j, j+1) contributes when both
    // fall in the same bin.
    for (int j = 0; j + 1 < n; ++j) {
        const int k = static_cast<int>(static_cast<std::int64_t>(j) * n0 / n);
        const int k_next = static_cast<int>(static_cast<std::int64_t>(j + 1) * n0 / n);
        if (k != k_next) continue;
        const double dy = series.y[j + 1] - series.y[j];
        out.xhat[k] += scaling_weight(j, layout) * dy;
        out.sigma2hat[k] += dy * dy;
        ++pairs[k];
    }
    const double scale = static_cast<double>(n0) / (2.0 * n);
    for (int k = 0; k < n0; ++k) {
        out.sigma2hat[k] *= scale;
        if (pairs[k] == 0)
            throw std::logic_error("preaverage: internal error, empty pair set in a bin");
    }
    return out;
}

}  // namespace tcvol
