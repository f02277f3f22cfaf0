#include "tcvol/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace tcvol {

namespace {

std::vector<QuadNode> compute_gl(int n) {
    std::vector<QuadNode> nodes(n);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-based initial guess for the i-th root.
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Legendre recurrence: p0 = 1, p1 = x.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = {-x, w};
        nodes[n - 1 - i] = {x, w};
    }
    return nodes;
}

}  // namespace

const std::vector<QuadNode>& gauss_legendre(int npoints) {
    if (npoints < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    static std::map<int, std::vector<QuadNode>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(npoints);
    if (it == cache.end()) it = cache.emplace(npoints, compute_gl(npoints)).first;
    return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int panels, int points_per_panel) {
    const auto& nodes = gauss_legendre(points_per_panel);
    const double dx = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * dx;
        const double mid = lo + 0.5 * dx;
        double s = 0.0;
        for (const auto& nd : nodes) s += nd.w * f(mid + 0.5 * dx * nd.x);
        total += 0.5 * dx * s;
    }
    return total;
}

namespace {

double simpson(double fa, double fm, double fb, double a, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adsimp(const std::function<double(double)>& f, double a, double b,
              double fa, double fm, double fb, double whole, double tol,
              int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(fa, flm, fm, a, m);
    const double right = simpson(fm, frm, fb, m, b);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adsimp(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adsimp(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    return adsimp(f, a, b, fa, fm, fb, simpson(fa, fm, fb, a, b), tol, max_depth);
}

}  // namespace tcvol
