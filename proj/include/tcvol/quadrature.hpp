#pragma once

#include <functional>
#include <vector>

namespace tcvol {

struct QuadNode {
    double x;
    double w;
};

// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
// on the Legendre polynomial. Cached per order.
const std::vector<QuadNode>& gauss_legendre(int npoints);

// Composite Gauss-Legendre rule: `panels` equal panels on [a, b] with
// `points_per_panel` nodes each.
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int panels, int points_per_panel);

// Adaptive Simpson with absolute tolerance `tol`.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth = 50);

}  // namespace tcvol
