// One-sided stable subordinator densities and the subordination route:
//   e^{-t lambda^{d/2}} = Integral_0^inf e^{-s lambda} eta_t^d(s) ds,
//   eta_t^d(s) = t^{-2/d} eta_1^d(s / t^{2/d}).
//
// eta_1 (alpha = d/2) is evaluated by two complementary representations:
//  * s below ~2.6: the positive-integrand form
//      eta_1(s) = (alpha/(1-alpha)) s^{-1/(1-alpha)} (1/pi)
//                 Integral_0^pi A(psi) exp(-s^{-alpha/(1-alpha)} A(psi)) dpsi,
//      A(psi) = [sin(alpha psi)/sin psi]^{alpha/(1-alpha)}
//               [sin((1-alpha) psi)/sin psi],
//    which has no cancellation at any parameter value;
//  * s above ~2.6: the convergent series
//      eta_1(s) = (1/pi) sum_{k>=1} (-1)^{k+1} Gamma(k alpha + 1)/k!
//                 sin(pi k alpha) s^{-k alpha - 1},
//    whose terms decay once k alpha ln s outruns the Gamma growth; at the
//    switch point the largest term is O(1) so no precision is lost.
// The two regimes overlap and are cross-checked in tests; correctness is
// anchored to the d = 1 closed form and the Laplace identity.

#pragma once

#include <vector>

namespace heatkern {

// (1/(2 sqrt pi)) t e^{-t^2/(4s)} s^{-3/2}, the d = 1 closed form.
double eta_d1(double t, double s);

// Unit-scale density of the alpha-stable subordinator, alpha in (0,1).
double eta1_stable(double alpha, double s);

// General (d, t) density via the exact scaling relation.
double eta_general(double d, double t, double s);

// Relative residual of the Laplace identity at one (d, t, lambda).
double laplace_identity_relerr(double d, double t, double lambda);

// Mass of eta_1 beyond U (series form; needs U in the series regime).
double eta1_tail_mass(double alpha, double U);

struct TailReport {
    double ratio_min;
    double ratio_max;
};

// Ratio eta_t^d(s) / (t s^{-1-d/2}) over the grid (tail comparison form).
TailReport tail_asymptotics_check(double d, double t,
                                  const std::vector<double>& s_grid);

// Fractional kernel on S^1 (n=1) or T^2 (n=2) by subordinating the Gaussian:
//   K = Integral G(x,y,tau) eta_t^d(tau) dtau,
// computed in the scaled variable tau = t^{2/d} u with the far tail replaced
// by the equilibrium constant times the exact remaining eta mass.
double subordinated_kernel(double d, double x, double y, double t, int n = 1);

}  // namespace heatkern
