// Truncated operator matrices on the Fourier basis e^{ikx}, k = -K..K, in
// left quantization: Op(a)[j][k] = a-hat_{j-k}(k), the (j-k)-th Fourier
// coefficient in x of a(x, k).
//
// Matrices use raw lattice values of the symbol (the operator itself is not
// excised; the one lattice point inside the excision zone is k = 0, where
// the homogeneous-branch conventions of HomogTerm::eval_raw apply).

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

#include "heatkern/classical_symbol.hpp"
#include "heatkern/multiplier.hpp"
#include "heatkern/symbol_expr.hpp"

namespace heatkern {

// Separable product c(x) * f(k); general enough for classical terms and
// bracket-type radial factors.
struct LatticeOpTerm {
    TrigPoly coeff;
    std::function<std::complex<double>(long)> radial;
};

Eigen::MatrixXcd build_matrix(const std::vector<LatticeOpTerm>& terms, long K);
std::vector<LatticeOpTerm> lattice_terms(const ClassicalSymbol& p);
Eigen::MatrixXcd build_matrix(const ClassicalSymbol& p, long K);
Eigen::MatrixXcd build_matrix(const MultiplierSymbol& p, long K);  // diagonal

// Op(a) at a fixed spectral parameter. When the principal part is constant
// in x the Fourier coefficients are exact (trig-polynomial algebra);
// otherwise columns are sampled on an oversampled x-grid and transformed,
// which is spectrally accurate for these analytic symbols.
Eigen::MatrixXcd build_matrix(const SymbolExpr& a, const ClassicalSymbol& p,
                              std::complex<double> lambda, long K,
                              int oversample = 8);

bool is_hermitian(const Eigen::MatrixXcd& A, double tol = 1e-12);
Eigen::VectorXcd matrix_spectrum(const Eigen::MatrixXcd& A);
double matrix_gamma(const Eigen::MatrixXcd& A);  // min Re eigenvalue

// e^{-tA} with the decomposition reused across time values. Hermitian
// matrices go through the unitary eigendecomposition; everything else uses
// Pade scaling-and-squaring per call.
class SemigroupCalculator {
  public:
    explicit SemigroupCalculator(Eigen::MatrixXcd A);
    Eigen::MatrixXcd operator()(std::complex<double> t) const;
    bool hermitian() const { return herm_; }
    const Eigen::MatrixXcd& matrix() const { return A_; }

  private:
    Eigen::MatrixXcd A_;
    bool herm_;
    Eigen::VectorXd evals_;
    Eigen::MatrixXcd evecs_;
};

// K(x_i, y_j) = (1/2pi) sum_{a,b} E[a][b] e^{i a x_i} e^{-i b y_j}
Eigen::MatrixXcd kernel_from_semigroup(const Eigen::MatrixXcd& E,
                                       const std::vector<double>& xs,
                                       const std::vector<double>& ys);

// Apply the truncated semigroup to a trig polynomial and evaluate at xs.
std::vector<std::complex<double>> apply_semigroup(const Eigen::MatrixXcd& E,
                                                  const TrigPoly& u,
                                                  const std::vector<double>& xs);

}  // namespace heatkern
