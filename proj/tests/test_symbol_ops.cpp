#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "heatkern/classical_symbol.hpp"
#include "heatkern/errors.hpp"
#include "heatkern/parametrix.hpp"
#include "heatkern/symbol_expr.hpp"

using namespace heatkern;
using C = std::complex<double>;

namespace {

// a(x) |xi| + b(x), with a = 1 + cos(x)/2 and b = 1/4 + cos(x)/4
ClassicalSymbol variable_symbol() {
    const TrigPoly a = TrigPoly::constant(1.0) + TrigPoly::cosine(1, 0.5);
    const TrigPoly b = TrigPoly::constant(0.25) + TrigPoly::cosine(1, 0.25);
    return ClassicalSymbol(
        1.0, {HomogTerm(1.0, a), HomogTerm(0.0, b)});
}

}  // namespace

TEST_SUITE("symbol_algebra") {

TEST_CASE("expression evaluation substitutes the excised resolvent") {
    const ClassicalSymbol p = variable_symbol();
    const C lambda(-2.0, 0.5);
    const double x = 0.7, xi = 3.0;
    // q^2 with unit coefficient
    SymbolExpr e = SymbolExpr::from_term(HomogTerm::unit(), 2);
    const C p0 = p.principal().eval(x, xi);
    const C expect = 1.0 / ((p0 - lambda) * (p0 - lambda));
    CHECK(std::abs(e.eval(p, x, xi, lambda) - expect) < 1e-14);
}

TEST_CASE("placeholder differentiation follows the chain rule") {
    const ClassicalSymbol p = variable_symbol();
    const HomogTerm dxi_p0 = p.principal().d_xi();
    const SymbolExpr q = SymbolExpr::from_term(HomogTerm::unit(), 1);
    const SymbolExpr dq = q.d_xi(dxi_p0);
    // d/dxi (p0 - lambda)^{-1} = -(d_xi p0) (p0 - lambda)^{-2}
    const C lambda(-1.0, 0.0);
    const double x = 0.4, xi = 2.0;
    const C p0 = p.principal().eval(x, xi);
    const C expect =
        -dxi_p0.eval(x, xi) / ((p0 - lambda) * (p0 - lambda));
    CHECK(std::abs(dq.eval(p, x, xi, lambda) - expect) < 1e-14);
}

TEST_CASE("lowering by the principal factor") {
    const ClassicalSymbol p = variable_symbol();
    SymbolExpr e = SymbolExpr::from_term(HomogTerm::abs_xi(1.0), 3);
    const SymbolExpr lowered = e.mul_principal_minus_lambda();
    const C lambda(0.0, 1.0);
    const double x = 1.1, xi = 4.0;
    const C p0 = p.principal().eval(x, xi);
    const C lhs = lowered.eval(p, x, xi, lambda);
    const C rhs = e.eval(p, x, xi, lambda) * (p0 - lambda);
    CHECK(std::abs(lhs - rhs) < 1e-14 * std::abs(rhs));
}

TEST_CASE("composition reduces to a product for xi-free left factor") {
    const ClassicalSymbol p = variable_symbol();
    const SymbolExpr f =
        SymbolExpr::from_term(HomogTerm(0.0, TrigPoly::cosine(1)));
    const SymbolExpr g = SymbolExpr::from_term(HomogTerm::abs_xi(1.0));
    const SymbolExpr c = compose_truncated(f, g, 3, p);
    const double x = 0.3, xi = 2.0;
    const C expect = std::cos(x) * 2.0;
    CHECK(std::abs(c.eval(p, x, xi, C(0, 0)) - expect) < 1e-14);
}

TEST_CASE("composition picks up one derivative cross term") {
    // Op(|xi|) Op(f) has symbol |xi| f - i sign(xi) f' exactly
    const ClassicalSymbol p = variable_symbol();
    const SymbolExpr g = SymbolExpr::from_term(HomogTerm::abs_xi(1.0));
    const SymbolExpr f =
        SymbolExpr::from_term(HomogTerm(0.0, TrigPoly::cosine(1)));
    const SymbolExpr c = compose_truncated(g, f, 4, p);
    const double x = 0.3;
    for (double xi : {2.0, -2.0}) {
        const double sgn = xi > 0 ? 1.0 : -1.0;
        const C expect = C(std::abs(xi) * std::cos(x), 0.0) +
                         C(0.0, -1.0) * sgn * C(-std::sin(x), 0.0);
        CHECK(std::abs(c.eval(p, x, xi, C(0, 0)) - expect) < 1e-14);
    }
}

TEST_CASE("recursion residuals vanish identically") {
    const ClassicalSymbol p = variable_symbol();
    const auto terms = resolvent_terms(p, 4);
    REQUIRE(terms.size() == 4);
    for (int m = 0; m < 4; ++m) {
        const SymbolExpr r = recursion_residual(p, terms, m);
        CHECK(r.max_abs_coeff() < 1e-12);
    }
}

TEST_CASE("second term matches the hand-derived formula") {
    // q_{-d-1} = -p_{d-1} q^2 - i (d_xi p_d)(d_x p_d) q^3
    const ClassicalSymbol p = variable_symbol();
    const auto terms = resolvent_terms(p, 2);
    SymbolExpr expect;
    expect.add(2, p.terms()[1].scaled(-1.0));
    expect.add(3, (p.principal().d_xi() * p.principal().d_x())
                      .scaled(C(0.0, -1.0)));
    for (double x : {0.0, 0.9, 2.1})
        for (double xi : {1.5, -2.5})
            for (C lambda : {C(-1.0, 0.0), C(-0.5, 2.0)}) {
                const C got = terms[1].eval(p, x, xi, lambda);
                const C want = expect.eval(p, x, xi, lambda);
                CHECK(std::abs(got - want) < 1e-13);
            }
}

TEST_CASE("coefficient degrees sit on the dilation ladder") {
    // in q_{-d-l}, the coefficient of q^j is homogeneous of degree
    // (j-1) d - l
    const ClassicalSymbol p = variable_symbol();
    const double d = p.order();
    const auto terms = resolvent_terms(p, 4);
    for (std::size_t l = 0; l < terms.size(); ++l)
        for (const auto& [j, hs] : terms[l].parts())
            for (const auto& h : hs)
                CHECK(h.degree() ==
                      doctest::Approx((j - 1) * d - static_cast<double>(l)));
}

TEST_CASE("multiplier principal part terminates the expansion") {
    const ClassicalSymbol p(1.0, {HomogTerm::abs_xi(1.0)});
    const auto terms = resolvent_terms(p, 3);
    CHECK_FALSE(terms[0].empty());
    CHECK(terms[1].empty(1e-14));
    CHECK(terms[2].empty(1e-14));
}

TEST_CASE("partial sums converge geometrically for a shifted multiplier") {
    // p = |xi| + 1: expansion terms are (-1)^l q^{l+1}, so at xi = 4,
    // lambda = -1 the partial sums form a geometric series with ratio -1/5
    // converging to the exact resolvent value 1/6
    const ClassicalSymbol p(
        1.0, {HomogTerm::abs_xi(1.0), HomogTerm::unit()});
    const auto terms = resolvent_terms(p, 6);
    const C lambda(-1.0, 0.0);
    const double xi = 4.0;
    const double exact = 1.0 / 6.0;
    C sum = 0.0;
    std::vector<double> errs;
    for (const auto& tm : terms) {
        sum += tm.eval(p, 0.0, xi, lambda);
        errs.push_back(std::abs(sum - exact));
    }
    for (std::size_t l = 1; l < errs.size(); ++l)
        CHECK(errs[l] == doctest::Approx(errs[l - 1] / 5.0).epsilon(1e-9));
    CHECK(errs.back() < 2e-5);
}

TEST_CASE("ellipticity and sector of the test symbols") {
    const ClassicalSymbol p = variable_symbol();
    CHECK(p.ellipticity_constant() == doctest::Approx(0.5));
    CHECK(p.sector_angle() == doctest::Approx(0.0));
    CHECK_FALSE(p.is_multiplier());
    const ClassicalSymbol m(1.0, {HomogTerm::abs_xi(1.0)});
    CHECK(m.is_multiplier());
    CHECK_THROWS_AS(
        ClassicalSymbol(1.0, {HomogTerm(1.0, TrigPoly::cosine(1))})
            .ellipticity_constant(),
        ellipticity_error);
}

}  // TEST_SUITE
