#include <cmath>
#include <complex>

#include "doctest.h"
#include "heatkern/trig_poly.hpp"

using heatkern::TrigPoly;
using C = std::complex<double>;

TEST_SUITE("trig_poly") {

TEST_CASE("factories evaluate to the named functions") {
    const double xs[] = {0.0, 0.3, 1.7, -2.2, 3.14};
    for (double x : xs) {
        CHECK(TrigPoly::constant(2.5).eval(x).real() == doctest::Approx(2.5));
        CHECK(TrigPoly::cosine(3, 1.5).eval(x).real() ==
              doctest::Approx(1.5 * std::cos(3 * x)));
        CHECK(TrigPoly::sine(2, 0.7).eval(x).real() ==
              doctest::Approx(0.7 * std::sin(2 * x)));
        const C h = TrigPoly::harmonic(4, {0.0, 1.0}).eval(x);
        CHECK(h.real() == doctest::Approx(-std::sin(4 * x)));
        CHECK(h.imag() == doctest::Approx(std::cos(4 * x)));
    }
}

TEST_CASE("product is coefficient convolution") {
    // cos^2(x) = 1/2 + cos(2x)/2
    const TrigPoly c = TrigPoly::cosine(1);
    const TrigPoly sq = c * c;
    CHECK(std::abs(sq.coeff(0) - C(0.5, 0.0)) < 1e-15);
    CHECK(std::abs(sq.coeff(2) - C(0.25, 0.0)) < 1e-15);
    CHECK(std::abs(sq.coeff(-2) - C(0.25, 0.0)) < 1e-15);
    CHECK(sq.coeff(1) == C(0.0, 0.0));
    CHECK(sq.bandwidth() == 2);

    // cos(x) sin(x) = sin(2x)/2
    const TrigPoly cs = TrigPoly::cosine(1) * TrigPoly::sine(1);
    for (double x : {0.2, 1.1, 2.9})
        CHECK(cs.eval(x).real() ==
              doctest::Approx(0.5 * std::sin(2 * x)).epsilon(1e-13));
}

TEST_CASE("derivative multiplies modes by im") {
    const TrigPoly d = TrigPoly::cosine(3).diff();
    for (double x : {0.1, 0.9, 2.3})
        CHECK(d.eval(x).real() ==
              doctest::Approx(-3.0 * std::sin(3 * x)).epsilon(1e-13));
    CHECK(TrigPoly::constant(4.0).diff().is_zero());
}

TEST_CASE("reality and conjugation") {
    const TrigPoly r = TrigPoly::constant(1.0) + TrigPoly::cosine(2, 0.5) +
                       TrigPoly::sine(5, -0.25);
    CHECK(r.is_real());
    CHECK(r.conjugated().coeff(2) == r.coeff(2));

    const TrigPoly q = TrigPoly::harmonic(1, {0.5, 0.5});
    CHECK_FALSE(q.is_real());
    const double x = 0.7;
    CHECK(q.conjugated().eval(x).real() == doctest::Approx(q.eval(x).real()));
    CHECK(q.conjugated().eval(x).imag() == doctest::Approx(-q.eval(x).imag()));
}

TEST_CASE("linear arithmetic") {
    const TrigPoly a = TrigPoly::cosine(1) + TrigPoly::cosine(1);
    CHECK(std::abs(a.coeff(1) - C(1.0, 0.0)) < 1e-15);
    const TrigPoly b = TrigPoly::cosine(1) - TrigPoly::cosine(1);
    CHECK(b.is_zero());
    const TrigPoly s = TrigPoly::sine(2) * C(2.0, 0.0);
    CHECK(s.eval(1.0).real() == doctest::Approx(2.0 * std::sin(2.0)));
    CHECK(TrigPoly::constant(3.0).is_constant());
    CHECK_FALSE(TrigPoly::cosine(1).is_constant());
}

}  // TEST_SUITE
