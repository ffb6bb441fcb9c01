// Resolvent parametrix for a strongly elliptic classical symbol p of order d.
//
// The expansion terms q_{-d-l}, l = 0, 1, ..., are built by the standard
// composition recursion for Op(q) Op(p - lambda) ~ I, with every q_{-d-l}
// stored as a polynomial in the placeholder q = (p0 - lambda)^{-1} whose
// coefficients are finite sums of homogeneous terms. Differentiation of the
// placeholder follows d_xi q^j = -j (d_xi p0) q^{j+1} and lowering
// (p0 - lambda) q^j = q^{j-1}, so the recursion stays exact in this algebra.
//
// Heat semigroup terms come out by the residue substitution
//   q^{j} -> t^{j-1}/(j-1)! * exp(-t * chi(xi) p0(x, xi)).

#pragma once

#include <complex>
#include <vector>

#include "heatkern/classical_symbol.hpp"
#include "heatkern/multiplier.hpp"
#include "heatkern/symbol_expr.hpp"

namespace heatkern {

// First L expansion terms, index l = 0..L-1 giving degrees -d-l.
std::vector<SymbolExpr> resolvent_terms(const ClassicalSymbol& p, int L);

// Left-hand side of the m-th composition identity evaluated on the computed
// terms; identically zero (as placeholder-polynomial coefficients) when the
// recursion is satisfied. m = 0 yields q_0 * (p0 - lambda) - 1.
SymbolExpr recursion_residual(const ClassicalSymbol& p,
                              const std::vector<SymbolExpr>& terms, int m);

// One heat-symbol term v_{-d-l}(x, xi, t) from the resolvent term q_{-d-l}.
std::complex<double> heat_term_eval(const ClassicalSymbol& p,
                                    const SymbolExpr& q_l, double x, double xi,
                                    std::complex<double> t);

// S^1 kernel of one heat term: (1/2pi) sum_k v(x, k, t) e^{ik(x-y)}.
std::complex<double> term_kernel(const ClassicalSymbol& p, const SymbolExpr& q_l,
                                 double x, double y, std::complex<double> t,
                                 long kmax);

// Exact multiplier kernel minus the first M heat-term kernels of its own
// symbol expansion; p must agree with the multiplier on the lattice.
std::complex<double> remainder_kernel(const MultiplierSymbol& exact,
                                      const ClassicalSymbol& p, int M, double x,
                                      double y, std::complex<double> t,
                                      long kmax);

struct ResidualReport {
    double op_norm;          // || Q_L (P - lambda) - I || on the center block
    double lambda_distance;  // dist(lambda, spectrum of the truncation)
};

// Operator-norm residual of the truncated parametrix at spectral parameter
// lambda. Matrices are assembled on a padded lattice and the product is
// restricted to the inner (2K+1)-block so truncation edges do not pollute
// the norm.
ResidualReport parametrix_residual(const ClassicalSymbol& p, int L,
                                   std::complex<double> lambda, long K,
                                   long pad = 8);

}  // namespace heatkern
