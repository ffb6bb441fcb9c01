// Quadrature building blocks: Gauss-Legendre rules of arbitrary order and an
// adaptive Gauss-Kronrod 15(7) integrator for real integrands.

#pragma once

#include <functional>
#include <vector>

namespace heatkern {

struct GaussRule {
    std::vector<double> x;  // nodes on [-1, 1], ascending
    std::vector<double> w;  // positive weights, sum = 2
};

// Nodes by Newton iteration on the Legendre recurrence; results are cached
// per order. Orders up to a few hundred are fine.
const GaussRule& gauss_legendre(int n);

// Integral of f over [a, b]. Panels are bisected until the embedded 15/7
// error estimate meets abs_tol (distributed over subintervals) or rel_tol
// against the running panel value. Throws accuracy_error when max_depth
// bisections cannot reach the target.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, double rel_tol,
                          int max_depth = 52);

}  // namespace heatkern
