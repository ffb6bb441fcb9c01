#include <cmath>
#include <complex>

#include "doctest.h"
#include "heatkern/excision.hpp"
#include "heatkern/homog_term.hpp"

using heatkern::excision_chi;
using heatkern::HomogTerm;
using heatkern::TrigPoly;
using C = std::complex<double>;

TEST_SUITE("homog_term") {

TEST_CASE("excision step endpoints and interior value") {
    CHECK(excision_chi(0.3) == 0.0);
    CHECK(excision_chi(-0.5) == 0.0);
    CHECK(excision_chi(1.0) == 1.0);
    CHECK(excision_chi(-7.0) == 1.0);
    // u = 2*0.75 - 1 = 1/2: u^3 (10 - 15u + 6u^2) = (1/8)(10 - 7.5 + 1.5)
    CHECK(excision_chi(0.75) == doctest::Approx(0.5));
    CHECK(heatkern::excision_chi_prime(0.5) == 0.0);
    CHECK(heatkern::excision_chi_prime(1.0) == 0.0);
    // symmetric step, antisymmetric slope
    CHECK(heatkern::excision_chi_prime(-0.8) ==
          doctest::Approx(-heatkern::excision_chi_prime(0.8)));
}

TEST_CASE("eval applies excision to nonzero degrees only") {
    const HomogTerm a = HomogTerm::abs_xi(1.0);
    CHECK(a.eval(0.0, 2.0).real() == doctest::Approx(2.0));
    CHECK(a.eval(0.0, -3.0).real() == doctest::Approx(3.0));
    CHECK(a.eval(0.0, 0.75).real() == doctest::Approx(0.75 * 0.5));
    CHECK(a.eval(0.0, 0.25) == C(0.0, 0.0));

    const HomogTerm zero_deg(0.0, TrigPoly::cosine(1));
    CHECK(zero_deg.eval(0.5, 0.1).real() == doctest::Approx(std::cos(0.5)));
}

TEST_CASE("raw lattice conventions at the origin") {
    CHECK(HomogTerm::abs_xi(1.0).eval_raw(0.3, 0.0) == C(0.0, 0.0));
    CHECK(HomogTerm::abs_xi(-2.0).eval_raw(0.3, 0.0) == C(0.0, 0.0));
    // degree 0 with different branches: average at the origin
    const HomogTerm sgn(0.0, TrigPoly::constant(1.0),
                        TrigPoly::constant(-1.0));
    CHECK(sgn.eval_raw(0.0, 0.0) == C(0.0, 0.0));
    CHECK(sgn.eval_raw(0.0, 5.0).real() == doctest::Approx(1.0));
    CHECK(sgn.eval_raw(0.0, -5.0).real() == doctest::Approx(-1.0));

    CHECK(HomogTerm::signed_xi().eval_raw(0.0, -2.0).real() ==
          doctest::Approx(-2.0));
    CHECK(HomogTerm::unit().eval_raw(1.0, 0.0).real() == doctest::Approx(1.0));
}

TEST_CASE("xi derivative drops degree and flips the minus branch") {
    // d/dxi |xi|^2 = 2 xi = 2|xi| sign(xi)
    const HomogTerm d = HomogTerm::abs_xi(2.0).d_xi();
    CHECK(d.degree() == doctest::Approx(1.0));
    CHECK(d.eval_raw(0.0, 3.0).real() == doctest::Approx(6.0));
    CHECK(d.eval_raw(0.0, -3.0).real() == doctest::Approx(-6.0));

    // D_xi = -i d/dxi
    const HomogTerm D = HomogTerm::abs_xi(2.0).D_xi();
    CHECK(D.eval_raw(0.0, 3.0).imag() == doctest::Approx(-6.0));
    CHECK(D.eval_raw(0.0, 3.0).real() == doctest::Approx(0.0));
}

TEST_CASE("x derivative differentiates the coefficients") {
    const HomogTerm h(1.0, TrigPoly::cosine(2));
    const HomogTerm hx = h.d_x();
    CHECK(hx.degree() == doctest::Approx(1.0));
    CHECK(hx.eval_raw(0.4, 2.0).real() ==
          doctest::Approx(-2.0 * std::sin(0.8) * 2.0));
}

TEST_CASE("products add degrees and multiply branch values") {
    const HomogTerm p = HomogTerm::abs_xi(1.0) * HomogTerm::signed_xi();
    CHECK(p.degree() == doctest::Approx(2.0));
    CHECK(p.eval_raw(0.0, 2.0).real() == doctest::Approx(4.0));
    CHECK(p.eval_raw(0.0, -2.0).real() == doctest::Approx(-4.0));

    const HomogTerm s = HomogTerm::abs_xi(1.0).scaled(C(0.0, 2.0));
    CHECK(s.eval_raw(0.0, 3.0).imag() == doctest::Approx(6.0));

    const HomogTerm m = HomogTerm::abs_xi(1.0).mul_trig(TrigPoly::cosine(1));
    CHECK(m.eval_raw(0.5, 2.0).real() == doctest::Approx(2.0 * std::cos(0.5)));
}

TEST_CASE("addition requires matching degree") {
    HomogTerm a = HomogTerm::abs_xi(1.0);
    a += HomogTerm::abs_xi(1.0).scaled(-1.0);
    CHECK(a.is_zero());
    CHECK(HomogTerm::abs_xi(1.0).same_degree(HomogTerm::signed_xi()));
    CHECK_FALSE(HomogTerm::abs_xi(2.0).same_degree(HomogTerm::unit()));
}

}  // TEST_SUITE
