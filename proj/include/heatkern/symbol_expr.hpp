// Polynomials in the resolvent placeholder q = (p0 - lambda)^{-1} with
// homogeneous-term coefficients:
//
//     a(x, xi, lambda) = sum_j [ sum_h h(x, xi) ] q^j,   j >= 0.
//
// The placeholder obeys two exact rules that the calculus below uses:
//     d/dxi q^j = -j (d/dxi p0) q^{j+1}      (same with d/dx)
//     (p0 - lambda) q^j = q^{j-1}            (j >= 1)
// so differentiation and composition stay inside this class of expressions.
// Evaluation substitutes q = (chi(xi) p0(x, xi) - lambda)^{-1}, the excised
// principal part keeping denominators regular at small |xi|.

#pragma once

#include <complex>
#include <map>
#include <vector>

#include "heatkern/classical_symbol.hpp"

namespace heatkern {

class SymbolExpr {
  public:
    using Value = std::complex<double>;

    SymbolExpr() = default;
    static SymbolExpr from_term(const HomogTerm& h, int qpow = 0);

    // Coefficients of equal degree merge; exact zeros are kept out.
    void add(int qpow, const HomogTerm& h);
    void add(const SymbolExpr& o);

    // qpow -> coefficient terms (distinct degrees)
    const std::map<int, std::vector<HomogTerm>>& parts() const { return q_; }
    bool empty(double tol = 0.0) const;
    double max_abs_coeff() const;
    int max_qpow() const;

    SymbolExpr scaled(Value s) const;
    SymbolExpr mul_trig_term(const HomogTerm& h) const;  // lambda-free factor
    SymbolExpr mul_q() const;                            // multiply by q
    // multiply by (p0 - lambda); requires every qpow >= 1
    SymbolExpr mul_principal_minus_lambda() const;
    SymbolExpr operator*(const SymbolExpr& o) const;

    SymbolExpr d_x(const HomogTerm& dx_p0) const;
    SymbolExpr d_xi(const HomogTerm& dxi_p0) const;
    SymbolExpr D_xi(const HomogTerm& dxi_p0) const;  // -i d/dxi

    Value eval(const ClassicalSymbol& p, double x, double xi,
               Value lambda) const;

  private:
    std::map<int, std::vector<HomogTerm>> q_;
};

// Truncated composition of two symbol-valued expressions,
//     c = sum_{alpha < M} (1/alpha!) (D_xi^alpha a) (d_x^alpha b),
// the one-dimensional Leibniz expansion of Op(a) Op(b) up to order M.
// p supplies the principal part driving the placeholder chain rule.
SymbolExpr compose_truncated(const SymbolExpr& a, const SymbolExpr& b, int M,
                             const ClassicalSymbol& p);

}  // namespace heatkern
