#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "heatkern/bounds.hpp"
#include "heatkern/contour.hpp"
#include "heatkern/multiplier.hpp"
#include "heatkern/spectral.hpp"

using namespace heatkern;
using C = std::complex<double>;

namespace {
const double kPi = std::acos(-1.0);

std::vector<C> integer_spectrum(long K) {
    std::vector<C> s;
    for (long k = 0; k <= K; ++k) s.push_back(C(double(k), 0.0));
    return s;
}
}  // namespace

TEST_SUITE("contour") {

TEST_CASE("scalar functional calculus reproduces the exponential") {
    const auto c = make_contour(integer_spectrum(40), C(1.0, 0.0));
    for (double mu : {0.0, 1.0, 4.0}) {
        const C got = contour_scalar(c, C(mu, 0.0));
        const double want = std::exp(-mu);
        CHECK(std::abs(got - C(want, 0)) < 1e-8 * want);
    }
}

TEST_CASE("arc wraps the origin only when the spectrum reaches it") {
    const auto low = make_contour(MultiplierSymbol::fractional(1.0), 64,
                                  C(1.0, 0.0));
    CHECK(low.long_arc);
    const auto shifted = make_contour(MultiplierSymbol::laplacian_shifted(1.0),
                                      64, C(1.0, 0.0));
    CHECK_FALSE(shifted.long_arc);
}

TEST_CASE("quadrature value is insensitive to admissible contour knobs") {
    const C t(1.0, 0.0);
    const auto a =
        make_contour(integer_spectrum(40), t, 1e-2, 200, 0.3, 0.4);
    const auto b =
        make_contour(integer_spectrum(40), t, 1e-2, 200, 0.7, 0.5);
    const C va = contour_scalar(a, C(1.0, 0.0));
    const C vb = contour_scalar(b, C(1.0, 0.0));
    CHECK(std::abs(va - vb) < 1e-8 * std::abs(va));
}

TEST_CASE("kernel route agrees with the mode sum at real time") {
    const auto p = MultiplierSymbol::fractional(1.0);
    const std::vector<double> deltas = {0.0, 0.5, kPi};
    const std::vector<C> ts = {C(1.0, 0.0)};
    const auto gc = heat_kernel_contour(p, deltas, ts, 1e-10, 200);
    const auto gs = heat_kernel_spectral(p, deltas, ts, 1e-13);
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        const C a = gc.at(0, i, 0), b = gs.at(0, i, 0);
        CHECK(std::abs(a - b) < 1e-8 * std::abs(b));
    }
}

TEST_CASE("quadrature error shrinks at least geometrically in the node budget") {
    // worst corner of the cross-route campaign: slowly decaying symbol at
    // the smallest time, where the ray panels carry the most phase
    const auto p = MultiplierSymbol::fractional(1.5);
    const auto deltas = standard_offsets();
    const std::vector<C> ts = {C(0.05, 0.0)};
    const auto gs = heat_kernel_spectral(p, deltas, ts, 1e-13);
    double ref_sup = 0.0;
    for (std::size_t i = 0; i < deltas.size(); ++i)
        ref_sup = std::max(ref_sup, std::abs(gs.at(0, i, 0)));
    double ratio[3];
    const int budgets[3] = {100, 200, 400};
    for (int j = 0; j < 3; ++j) {
        const auto gc = heat_kernel_contour(p, deltas, ts, 1e-10, budgets[j]);
        double diff = 0.0;
        for (std::size_t i = 0; i < deltas.size(); ++i)
            diff = std::max(diff, std::abs(gc.at(0, i, 0) - gs.at(0, i, 0)));
        ratio[j] = diff / ref_sup;
    }
    CHECK(ratio[1] < 1e-6);
    // observed drop per doubling is >100x; demand at least 8x so the check
    // stays robust while still ruling out algebraic convergence
    CHECK(ratio[1] < ratio[0] / 8.0);
    CHECK(ratio[2] < std::max(ratio[1] / 8.0, 1e-15));
}

TEST_CASE("kernel route handles complex time in the open half plane") {
    const auto p = MultiplierSymbol::fractional(1.0);
    const C t = std::polar(1.0, kPi / 3.0);
    const auto gc = heat_kernel_contour(p, {0.0, 1.0}, {t}, 1e-10, 400);
    const auto gs = heat_kernel_spectral(p, {0.0, 1.0}, {t}, 1e-13);
    for (std::size_t i = 0; i < 2; ++i) {
        const C a = gc.at(0, i, 0), b = gs.at(0, i, 0);
        CHECK(std::abs(a - b) < 1e-6 * std::abs(b));
    }
}

TEST_CASE("kernel is holomorphic in time") {
    // derivative along the real axis equals the derivative along the
    // imaginary axis divided by i
    const auto p = MultiplierSymbol::fractional(1.0);
    const double h = 1e-3;
    auto val = [&](C t) {
        return heat_kernel_contour(p, {0.5}, {t}, 1e-10, 300).at(0, 0, 0);
    };
    const C t0(1.0, 0.0);
    const C dre = (val(t0 + C(h, 0)) - val(t0 - C(h, 0))) / (2.0 * h);
    const C dim = (val(t0 + C(0, h)) - val(t0 - C(0, h))) / (C(0, 2.0) * h);
    CHECK(std::abs(dre - dim) < 1e-4 * std::abs(dre));
}

TEST_CASE("matrix semigroup through the contour matches the multiplier") {
    const auto p = MultiplierSymbol::laplacian_shifted(0.5);
    const long K = 12;
    const auto c = make_contour(p, K, C(0.7, 0.0));
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(2 * K + 1, 2 * K + 1);
    for (long k = -K; k <= K; ++k)
        A(k + K, k + K) = p.value(k);
    const auto E = contour_semigroup_matrix(A, c);
    for (long k = -K; k <= K; ++k) {
        // quadrature noise leaves an absolute floor well below the kernel
        // scale, so deeply damped modes are held to it rather than to a
        // relative target
        const C want = std::exp(-0.7 * p.value(k));
        CHECK(std::abs(E(k + K, k + K) - want) <
              1e-8 * std::abs(want) + 1e-9);
    }
}

}  // TEST_SUITE
