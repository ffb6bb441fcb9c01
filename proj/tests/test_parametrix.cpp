#include <cmath>
#include <complex>

#include "doctest.h"
#include "heatkern/multiplier.hpp"
#include "heatkern/parametrix.hpp"

using namespace heatkern;
using C = std::complex<double>;

TEST_SUITE("parametrix") {

TEST_CASE("heat substitution of the leading term") {
    // v_{-d} = e^{-t chi p0}; equals 1 at t = 0 for any xi
    const ClassicalSymbol p(1.0, {HomogTerm::abs_xi(1.0), HomogTerm::unit()});
    const auto terms = resolvent_terms(p, 2);
    CHECK(std::abs(heat_term_eval(p, terms[0], 0.0, 3.0, C(0, 0)) - 1.0) <
          1e-14);
    CHECK(std::abs(heat_term_eval(p, terms[0], 0.0, 3.0, C(1, 0)) -
                   std::exp(-3.0)) < 1e-14);
}

TEST_CASE("second heat term of a shifted multiplier") {
    // p = |xi| + 1: q_{-2} = -q^2, so v_{-2}(xi, t) = -t e^{-t chi |xi|};
    // at xi = 2, t = 1 this is -e^{-2}
    const ClassicalSymbol p(1.0, {HomogTerm::abs_xi(1.0), HomogTerm::unit()});
    const auto terms = resolvent_terms(p, 2);
    const C v = heat_term_eval(p, terms[1], 0.0, 2.0, C(1, 0));
    CHECK(v.real() == doctest::Approx(-std::exp(-2.0)).epsilon(1e-12));
    CHECK(std::abs(v.imag()) < 1e-15);
}

TEST_CASE("heat terms obey parabolic dilation outside the excision zone") {
    const TrigPoly a = TrigPoly::constant(1.0) + TrigPoly::cosine(1, 0.5);
    const TrigPoly b = TrigPoly::constant(0.25) + TrigPoly::cosine(1, 0.25);
    const ClassicalSymbol p(1.0, {HomogTerm(1.0, a), HomogTerm(0.0, b)});
    const auto terms = resolvent_terms(p, 3);
    const double x = 0.7, xi = 1.5, t = 0.8, s = 2.0;
    for (std::size_t l = 0; l < terms.size(); ++l) {
        const C base = heat_term_eval(p, terms[l], x, xi, C(t, 0));
        const C scaled =
            heat_term_eval(p, terms[l], x, s * xi, C(t / s, 0));
        CHECK(std::abs(scaled - base * std::pow(s, -double(l))) <
              1e-12 * std::abs(base));
    }
}

TEST_CASE("one-term expansion inverts a pure multiplier exactly") {
    const ClassicalSymbol p(1.0, {HomogTerm::abs_xi(1.0)});
    const auto rep = parametrix_residual(p, 1, C(-1.0, 0.0), 32);
    CHECK(rep.op_norm < 1e-12);
    CHECK(rep.lambda_distance == doctest::Approx(1.0));
}

TEST_CASE("expansion of a pure multiplier leaves no kernel remainder") {
    const auto exact = MultiplierSymbol::fractional(1.0);
    const ClassicalSymbol p(1.0, {HomogTerm::abs_xi(1.0)});
    for (double t : {0.5, 2.0}) {
        const C r = remainder_kernel(exact, p, 1, 0.0, 0.0, C(t, 0), 2000);
        CHECK(std::abs(r) < 1e-12);
    }
}

TEST_CASE("term kernels are even in the separation for even symbols") {
    const ClassicalSymbol p(1.0, {HomogTerm::abs_xi(1.0), HomogTerm::unit()});
    const auto terms = resolvent_terms(p, 2);
    const C kp = term_kernel(p, terms[1], 0.5, 0.5 - 0.8, C(1, 0), 400);
    const C km = term_kernel(p, terms[1], 0.5, 0.5 + 0.8, C(1, 0), 400);
    CHECK(std::abs(kp - km) < 1e-12);
}

TEST_CASE("residual norm decays in the spectral parameter") {
    // one extra expansion term buys one extra power of |lambda|; deeper
    // terms hit the floor left by the modes inside the excision zone, so
    // the honest statements are the lambda decay rates per length
    const TrigPoly a = TrigPoly::constant(1.0) + TrigPoly::cosine(1, 0.5);
    const TrigPoly b = TrigPoly::constant(0.25) + TrigPoly::cosine(1, 0.25);
    const ClassicalSymbol p(1.0, {HomogTerm(1.0, a), HomogTerm(0.0, b)});
    const double r1_near = parametrix_residual(p, 1, C(-10, 0), 48).op_norm;
    const double r1_far = parametrix_residual(p, 1, C(-1000, 0), 48).op_norm;
    CHECK(r1_far < r1_near / 50.0);

    const double r2_near = parametrix_residual(p, 2, C(-10, 0), 48).op_norm;
    const double r2_far = parametrix_residual(p, 2, C(-1000, 0), 48).op_norm;
    CHECK(r2_near < 0.2 * r1_near);
    CHECK(r2_far < r2_near / 400.0);

    // the floor is a property of the symbol, not of the truncation size
    const double f48 = parametrix_residual(p, 3, C(-30, 0), 48).op_norm;
    const double f96 = parametrix_residual(p, 3, C(-30, 0), 96).op_norm;
    CHECK(f96 == doctest::Approx(f48).epsilon(1e-3));
}

}  // TEST_SUITE
