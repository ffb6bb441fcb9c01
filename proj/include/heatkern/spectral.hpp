// Direct eigen-route kernels: mode sums for Fourier multipliers, the product
// Gaussian on the torus, and the closed Poisson-type forms used as oracles.
//
// Normalization on S^1: K(x, y, t) = (1/2pi) sum_k e^{-t p(k)} e^{ik(x-y)},
// so integrating K against u(y) dy over [0, 2pi) applies the semigroup to u.

#pragma once

#include <complex>
#include <vector>

#include "heatkern/kernel_grid.hpp"
#include "heatkern/multiplier.hpp"

namespace heatkern {

// Smallest cutoff K with exp(-re_t * ell_const * K^order) < tol (clamped to
// [16, hard_cap]). Throws truncation_error when the cap cannot satisfy tol.
long default_kmax(double ell_const, double order, double re_t,
                  double tol = 1e-12, long hard_cap = 40000000L);

// One time slice of the multiplier kernel at separations `deltas`:
//   row[i] = (1/2pi) sum_{|k| <= kmax} e^{-t p(k)} e^{ik delta_i}.
// tail_out (if set) receives an upper estimate of the dropped |k| > kmax
// mass; the estimate extends the summand decay beyond the cutoff.
std::vector<std::complex<double>> multiplier_kernel_row(
    const MultiplierSymbol& p, const std::vector<double>& deltas,
    std::complex<double> t, long kmax, double* tail_out = nullptr);

// Same with termwise derivative factors (-p(k))^j (ik)^g applied, i.e. the
// kernel of d_t^j d_x^g e^{-tP}.
std::vector<std::complex<double>> multiplier_derivative_row(
    const MultiplierSymbol& p, const std::vector<double>& deltas,
    std::complex<double> t, int j, int g, long kmax,
    double* tail_out = nullptr);

// T^2 multiplier kernel at separation (d1, d2), radial cutoff |k| <= kmax.
std::complex<double> multiplier_kernel_torus(const MultiplierSymbol& p,
                                             double d1, double d2,
                                             std::complex<double> t,
                                             long kmax);

// Cutoff sufficient for the derivative kernel factors |p(k)|^j |k|^g.
long derivative_kmax(double ell_const, double order, double re_t, int j, int g,
                     double tol = 1e-12);

// Full grid driver for S^1 multipliers; per-slice cutoff from default_kmax
// unless kmax_override > 0. Records route, largest cutoff and worst tail.
KernelGrid heat_kernel_spectral(const MultiplierSymbol& p,
                                const std::vector<double>& deltas,
                                const std::vector<std::complex<double>>& ts,
                                double tol = 1e-12, long kmax_override = 0);

// Heat kernel of the flat Laplacian on S^1 (n=1) or T^2 (n=2) by the method
// of images; tau > 0. Image count keeps the dropped tail below ~1e-15
// relative.
double gaussian_circle_kernel(double delta, double tau);
double gaussian_torus_kernel(double d1, double d2, double tau);
// Fourier-side counterpart (theta identity partner)
double gaussian_circle_kernel_fourier(double delta, double tau, long kmax);

// Closed form for the |k| multiplier on the circle:
//   (1/2pi) (1 - r^2) / (1 - 2 r cos(dtheta) + r^2),  r = e^{-t}.
double dn_heat_kernel_closed(double theta, double theta_prime, double t);

}  // namespace heatkern
