#include <cmath>
#include <vector>

#include "doctest.h"
#include "heatkern/quadrature.hpp"
#include "heatkern/spectral.hpp"
#include "heatkern/subordination.hpp"

using namespace heatkern;

namespace {
const double kPi = std::acos(-1.0);
const double kSqrtPi = std::sqrt(kPi);
}  // namespace

TEST_SUITE("subordination") {

TEST_CASE("closed form density at d = 1") {
    // (1/(2 sqrt pi)) t e^{-t^2/(4s)} s^{-3/2}; at t = 1, s = 1/4 this is
    // 4 / (sqrt(pi) e)
    CHECK(eta_d1(1.0, 0.25) ==
          doctest::Approx(4.0 / (kSqrtPi * std::exp(1.0))).epsilon(1e-14));
    CHECK(eta_d1(2.0, 1.0) ==
          doctest::Approx(std::exp(-1.0) / kSqrtPi).epsilon(1e-14));
    // vanishes (to double precision) as s -> 0+
    CHECK(eta_d1(1.0, 1e-6) == 0.0);
}

TEST_CASE("general evaluator reduces to the closed form at d = 1") {
    for (double t : {0.3, 1.0, 4.0})
        for (double s : {0.05, 0.4, 1.0, 2.5, 3.0, 10.0, 80.0}) {
            const double a = eta_general(1.0, t, s);
            const double b = eta_d1(t, s);
            if (b < 1e-300) {
                CHECK(a < 1e-250);
            } else {
                CHECK(a == doctest::Approx(b).epsilon(1e-8));
            }
        }
}

TEST_CASE("density is continuous across the representation switch") {
    for (double alpha : {0.25, 0.5, 0.75, 0.9}) {
        const double lo = eta1_stable(alpha, 2.6 - 1e-7);
        const double hi = eta1_stable(alpha, 2.6 + 1e-7);
        CHECK(hi == doctest::Approx(lo).epsilon(1e-6));
    }
}

TEST_CASE("density is nonnegative") {
    for (double alpha : {0.2, 0.5, 0.8})
        for (double s : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 50.0, 1000.0})
            CHECK(eta1_stable(alpha, s) >= 0.0);
}

TEST_CASE("unit mass split between quadrature and series tail") {
    for (double alpha : {0.3, 0.5, 0.75}) {
        const double U = 10.0;
        const double body = integrate_adaptive(
            [&](double s) { return eta1_stable(alpha, s); }, 0.0, U, 1e-11,
            1e-10);
        const double total = body + eta1_tail_mass(alpha, U);
        CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("laplace transform identity holds across parameters") {
    for (double d : {0.6, 1.0, 1.4})
        for (double lam : {0.5, 2.0})
            CHECK(laplace_identity_relerr(d, 1.0, lam) < 1e-7);
}

TEST_CASE("far tail approaches the stable asymptote") {
    // eta_t^d(s) ~ c_alpha t s^{-1-d/2} with c_{1/2} = 1/(2 sqrt pi)
    std::vector<double> s_grid;
    for (double s = 1e3; s <= 1e5; s *= 10.0) s_grid.push_back(s);
    const auto rep = tail_asymptotics_check(1.0, 1.0, s_grid);
    const double limit = 1.0 / (2.0 * kSqrtPi);
    CHECK(rep.ratio_min == doctest::Approx(limit).epsilon(2e-2));
    CHECK(rep.ratio_max == doctest::Approx(limit).epsilon(2e-2));
}

TEST_CASE("subordinated kernel matches the closed poisson form at d = 1") {
    for (double t : {0.3, 1.0})
        for (double delta : {0.0, 1.0, kPi}) {
            const double got = subordinated_kernel(1.0, delta, 0.0, t, 1);
            const double want = dn_heat_kernel_closed(delta, 0.0, t);
            CHECK(got == doctest::Approx(want).epsilon(1e-6));
        }
}

TEST_CASE("subordinated kernel integrates to one over the circle") {
    const double d = 1.2, t = 0.7;
    // even in x, so integrate half the circle
    const double mass =
        2.0 * integrate_adaptive(
                  [&](double x) { return subordinated_kernel(d, x, 0.0, t, 1); },
                  0.0, kPi, 1e-7, 1e-7, 24);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-5));
}

}  // TEST_SUITE
