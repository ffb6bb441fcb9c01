// Dunford contour route: e^{-tP} = (i/2pi) Integral e^{-t lambda}
// (P - lambda)^{-1} d lambda over a wedge contour winding once, positively,
// around the spectrum.
//
// Geometry: rays lambda = r e^{+-i phi}, r in [r0, rmax], joined by the arc
// |lambda| = r0. With arg t = theta the ray angle is phi = (pi/2 - |theta|)/2
// so Re(t lambda) grows along both rays. When gamma(P) > 0 the arc crosses
// the positive real axis below the spectrum; when the spectrum reaches 0
// (fractional multipliers) the arc wraps the long way around the origin so
// the 0 eigenvalue, and with it the equilibrium mode, stays enclosed.
//
// Quadrature: composite Gauss-Legendre panels. On the rays, panels are laid
// out in the scaled variable u = |t| r: geometrically refined toward the
// vertex (the resolvent varies fastest there), one mid panel to u ~ 8, then
// wide panels capped at ~45 radians of phase each. Orders are scaled so the
// total node count approximates the requested budget.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "heatkern/classical_symbol.hpp"
#include "heatkern/kernel_grid.hpp"
#include "heatkern/multiplier.hpp"

namespace heatkern {

struct ContourSpec {
    std::complex<double> t;
    double phi = 0.0;   // ray half-angle
    double r0 = 0.0;    // vertex arc radius
    double rmax = 0.0;  // ray end radius
    bool long_arc = false;
    // weights fold in d lambda, orientation, and the i/(2pi) prefactor, so
    //   e^{-tP} ~= sum_q w_q e^{-t lambda_q} (P - lambda_q)^{-1}.
    std::vector<std::complex<double>> nodes;
    std::vector<std::complex<double>> weights;
};

// spectrum: samples of the truncated operator's eigenvalues (lattice values
// for multipliers). margin is relative: every node must stay at distance
// >= margin * (1 + |mu|) from every sample. eps_prime and phi_frac give the
// vertex radius cap and the fraction of (pi/2 - |theta|) used as ray angle
// (1/2 is the default rule; other admissible values exist for cross-checks).
ContourSpec make_contour(const std::vector<std::complex<double>>& spectrum,
                         std::complex<double> t, double margin = 1e-2,
                         int nq = 200, double eps_prime = 0.5,
                         double phi_frac = 0.5);
ContourSpec make_contour(const MultiplierSymbol& p, long K,
                         std::complex<double> t, double margin = 1e-2,
                         int nq = 200, double eps_prime = 0.5,
                         double phi_frac = 0.5);

// Quadrature of the scalar functional calculus: ~= e^{-t mu} for mu inside
// the contour. Doubles as the accuracy self-test.
std::complex<double> contour_scalar(const ContourSpec& c,
                                    std::complex<double> mu);

// (i/2pi) sum_q w_q e^{-t lambda_q} (A - lambda_q I)^{-1} by dense LU solves.
// Throws contour_error when a solve's condition estimate exceeds 1e12.
Eigen::MatrixXcd contour_semigroup_matrix(const Eigen::MatrixXcd& A,
                                          const ContourSpec& c);

// Multiplier kernels on S^1 through the contour, one contour per time.
KernelGrid heat_kernel_contour(const MultiplierSymbol& p,
                               const std::vector<double>& deltas,
                               const std::vector<std::complex<double>>& ts,
                               double tol = 1e-10, int nq = 200,
                               long kmax_override = 0);

// Variable-coefficient kernels via the truncated matrix.
KernelGrid heat_kernel_contour(const ClassicalSymbol& p,
                               const std::vector<double>& xs,
                               const std::vector<double>& ys,
                               const std::vector<std::complex<double>>& ts,
                               long K, int nq = 200);

}  // namespace heatkern
