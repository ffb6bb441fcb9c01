#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "heatkern/errors.hpp"
#include "heatkern/multiplier.hpp"
#include "heatkern/operator_matrix.hpp"
#include "heatkern/spectral.hpp"

using namespace heatkern;
using C = std::complex<double>;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_SUITE("spectral") {

TEST_CASE("closed form of the |k| semigroup at r = 1/2") {
    // r = e^{-t} = 1/2: diagonal value 3/(2 pi), antipodal value 1/(6 pi)
    const double t = std::log(2.0);
    CHECK(dn_heat_kernel_closed(0.0, 0.0, t) ==
          doctest::Approx(3.0 / (2.0 * kPi)).epsilon(1e-14));
    CHECK(dn_heat_kernel_closed(kPi, 0.0, t) ==
          doctest::Approx(1.0 / (6.0 * kPi)).epsilon(1e-14));
}

TEST_CASE("mode sum reproduces the closed form") {
    const auto p = MultiplierSymbol::dirichlet_to_neumann();
    for (double t : {0.1, 1.0, 3.0}) {
        const long kmax = default_kmax(1.0, 1.0, t, 1e-14);
        const auto row = multiplier_kernel_row(p, {0.0, 0.7, kPi}, C(t, 0),
                                               kmax);
        CHECK(std::abs(row[0] - dn_heat_kernel_closed(0.0, 0.0, t)) < 1e-12);
        CHECK(std::abs(row[1] - dn_heat_kernel_closed(0.7, 0.0, t)) < 1e-12);
        CHECK(std::abs(row[2] - dn_heat_kernel_closed(kPi, 0.0, t)) < 1e-12);
    }
}

TEST_CASE("kernel row is even in the separation") {
    const auto p = MultiplierSymbol::fractional(1.5);
    const long kmax = default_kmax(1.0, 1.5, 1.0, 1e-13);
    const auto row = multiplier_kernel_row(p, {0.9, -0.9}, C(1, 0), kmax);
    CHECK(std::abs(row[0] - row[1]) < 1e-14);
}

TEST_CASE("tail estimate bounds the dropped mass") {
    const auto p = MultiplierSymbol::fractional(0.5);
    const double t = 0.05;
    const long kmax = default_kmax(1.0, 0.5, t, 1e-10);
    double tail = 0.0, tail4 = 0.0;
    const auto row = multiplier_kernel_row(p, {0.0}, C(t, 0), kmax, &tail);
    const auto row4 =
        multiplier_kernel_row(p, {0.0}, C(t, 0), 4 * kmax, &tail4);
    CHECK(std::abs(row[0] - row4[0]) <= tail * 1.01 + 1e-15);
    CHECK(tail4 < tail);

    // grid driver keeps its recorded worst tail within the slack it allows
    const auto g = heat_kernel_spectral(p, {0.0}, {C(t, 0)}, 1e-10);
    CHECK(g.tail_bound < 64.0 * 1e-10);
}

TEST_CASE("grid driver flags identity slices and rejects hopeless cutoffs") {
    const auto p = MultiplierSymbol::fractional(1.0);
    const auto g = heat_kernel_spectral(p, {0.0, 1.0}, {C(0, 0), C(1, 0)});
    REQUIRE(g.identity_slice.size() == 2);
    CHECK(g.identity_slice[0]);
    CHECK_FALSE(g.identity_slice[1]);
    CHECK(std::abs(g.at(1, 0, 0) - C(dn_heat_kernel_closed(0.0, 0.0, 1.0), 0)) <
          1e-11);

    // a time so small that the hard mode cap cannot meet the tolerance
    CHECK_THROWS_AS(heat_kernel_spectral(p, {0.0}, {C(1e-12, 0)}, 1e-12),
                    truncation_error);
}

TEST_CASE("time derivative row matches finite differences") {
    const auto p = MultiplierSymbol::bracket();
    const double t = 0.8, h = 1e-4;
    const long kmax = default_kmax(1.0, 1.0, t - h, 1e-13);
    const long dkmax = derivative_kmax(1.0, 1.0, t - h, 1, 0, 1e-13);
    const auto d1 =
        multiplier_derivative_row(p, {0.4}, C(t, 0), 1, 0, dkmax);
    const auto up = multiplier_kernel_row(p, {0.4}, C(t + h, 0), kmax);
    const auto dn = multiplier_kernel_row(p, {0.4}, C(t - h, 0), kmax);
    const C fd = (up[0] - dn[0]) / (2.0 * h);
    CHECK(std::abs(d1[0] - fd) < 1e-5 * std::abs(fd));
}

TEST_CASE("space derivative row matches finite differences") {
    const auto p = MultiplierSymbol::fractional(2.0);
    const double t = 0.5, h = 1e-4;
    const long kmax = default_kmax(1.0, 2.0, t, 1e-13);
    const long dkmax = derivative_kmax(1.0, 2.0, t, 0, 1, 1e-13);
    const auto d1 =
        multiplier_derivative_row(p, {0.9}, C(t, 0), 0, 1, dkmax);
    const auto up = multiplier_kernel_row(p, {0.9 + h}, C(t, 0), kmax);
    const auto dn = multiplier_kernel_row(p, {0.9 - h}, C(t, 0), kmax);
    const C fd = (up[0] - dn[0]) / (2.0 * h);
    CHECK(std::abs(d1[0] - fd) < 1e-5 * std::abs(fd) + 1e-12);
}

TEST_CASE("image sum agrees with the mode sum for the gaussian") {
    for (double tau : {0.05, 0.5, 2.0})
        for (double delta : {0.0, 1.0, kPi}) {
            const long kmax =
                static_cast<long>(std::ceil(std::sqrt(40.0 / tau))) + 2;
            const double a = gaussian_circle_kernel(delta, tau);
            const double b = gaussian_circle_kernel_fourier(delta, tau, kmax);
            CHECK(std::abs(a - b) < 1e-12 * std::max(1.0, std::abs(a)));
        }
}

TEST_CASE("flat torus kernel factorizes") {
    CHECK(gaussian_torus_kernel(0.5, 1.2, 0.3) ==
          doctest::Approx(gaussian_circle_kernel(0.5, 0.3) *
                          gaussian_circle_kernel(1.2, 0.3))
              .epsilon(1e-13));
}

TEST_CASE("torus multiplier kernel matches the gaussian at d = 2") {
    const auto p = MultiplierSymbol::fractional_torus(2.0);
    const double t = 0.4;
    const C v = multiplier_kernel_torus(p, 0.6, -0.9, C(t, 0), 48);
    CHECK(std::abs(v - C(gaussian_torus_kernel(0.6, -0.9, t), 0)) < 1e-12);
}

TEST_CASE("lattice matrices of multipliers are diagonal and hermitian") {
    const auto A = build_matrix(MultiplierSymbol::laplacian_shifted(1.0), 8);
    CHECK(is_hermitian(A));
    CHECK(matrix_gamma(A) == doctest::Approx(1.0));
    const auto ev = matrix_spectrum(A);
    double mn = 1e300;
    for (int i = 0; i < ev.size(); ++i) mn = std::min(mn, ev[i].real());
    CHECK(mn == doctest::Approx(1.0));
}

TEST_CASE("semigroup application damps a single mode") {
    const auto A = build_matrix(MultiplierSymbol::fractional(1.0), 16);
    const SemigroupCalculator calc(A);
    CHECK(calc.hermitian());
    const auto E = calc(C(0.5, 0.0));
    const std::vector<double> xs = {0.0, 0.3, 1.4};
    const auto v = apply_semigroup(E, TrigPoly::cosine(3), xs);
    for (std::size_t i = 0; i < xs.size(); ++i)
        CHECK(std::abs(v[i] - std::exp(-1.5) * std::cos(3 * xs[i])) < 1e-12);
}

TEST_CASE("kernel reconstruction from the semigroup matrix") {
    const auto A = build_matrix(MultiplierSymbol::dirichlet_to_neumann(), 40);
    const SemigroupCalculator calc(A);
    const auto E = calc(C(2.0, 0.0));
    const std::vector<double> xs = {0.0, 1.1};
    const std::vector<double> ys = {0.2};
    const auto K = kernel_from_semigroup(E, xs, ys);
    for (std::size_t i = 0; i < xs.size(); ++i)
        CHECK(std::abs(K(i, 0) -
                       C(dn_heat_kernel_closed(xs[i], 0.2, 2.0), 0)) < 1e-10);
}

}  // TEST_SUITE
