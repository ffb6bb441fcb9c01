#include "heatkern/operator_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <unsupported/Eigen/MatrixFunctions>

#include "heatkern/errors.hpp"
#include "heatkern/excision.hpp"

namespace heatkern {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

Eigen::MatrixXcd build_matrix(const std::vector<LatticeOpTerm>& terms, long K) {
    const long n = 2 * K + 1;
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& term : terms) {
        std::vector<std::complex<double>> radial(static_cast<size_t>(n));
        for (long k = -K; k <= K; ++k)
            radial[static_cast<size_t>(k + K)] = term.radial(k);
        for (const auto& [m, c] : term.coeff.coeffs()) {
            // coefficient m shifts row index: contributes to A[k+m][k]
            for (long k = -K; k <= K; ++k) {
                const long j = k + m;
                if (j < -K || j > K) continue;
                A(j + K, k + K) += c * radial[static_cast<size_t>(k + K)];
            }
        }
    }
    return A;
}

std::vector<LatticeOpTerm> lattice_terms(const ClassicalSymbol& p) {
    std::vector<LatticeOpTerm> out;
    for (const auto& h : p.terms()) {
        // split into the two homogeneous branches; eval_raw conventions at k=0
        const double deg = h.degree();
        out.push_back({h.branch_plus(), [deg](long k) -> std::complex<double> {
                           if (k > 0) return std::pow(static_cast<double>(k), deg);
                           if (k < 0) return 0.0;
                           return deg == 0.0 ? 0.5 : 0.0;
                       }});
        out.push_back({h.branch_minus(), [deg](long k) -> std::complex<double> {
                           if (k < 0) return std::pow(static_cast<double>(-k), deg);
                           if (k > 0) return 0.0;
                           return deg == 0.0 ? 0.5 : 0.0;
                       }});
    }
    return out;
}

Eigen::MatrixXcd build_matrix(const ClassicalSymbol& p, long K) {
    return build_matrix(lattice_terms(p), K);
}

Eigen::MatrixXcd build_matrix(const MultiplierSymbol& p, long K) {
    if (p.dim() != 1)
        throw config_error("matrix truncation is implemented for the circle only");
    const long n = 2 * K + 1;
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
    for (long k = -K; k <= K; ++k) A(k + K, k + K) = p.value(k);
    return A;
}

namespace {

bool principal_is_constant(const ClassicalSymbol& p) {
    return p.principal().branch_plus().is_constant(0.0) &&
           p.principal().branch_minus().is_constant(0.0);
}

// Exact column coefficients when every x-dependence lives in trig-poly
// factors (principal part constant in x, so q-values are x-independent).
Eigen::MatrixXcd build_exact(const SymbolExpr& a, const ClassicalSymbol& p,
                             std::complex<double> lambda, long K) {
    const long n = 2 * K + 1;
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
    for (long k = -K; k <= K; ++k) {
        const double xi = static_cast<double>(k);
        const std::complex<double> qv =
            1.0 / (p.principal().eval(0.0, xi) - lambda);
        for (const auto& [qpow, hs] : a.parts()) {
            const std::complex<double> qfac = std::pow(qv, qpow);
            for (const auto& h : hs) {
                // branch value at k with excision, coefficient poly in x
                const double deg = h.degree();
                std::complex<double> plus = 0.0, minus = 0.0;
                if (deg == 0.0) {
                    if (k > 0) plus = 1.0;
                    else if (k < 0) minus = 1.0;
                    else plus = minus = 0.5;
                } else {
                    const double chi = excision_chi(xi);
                    if (k > 0) plus = chi * std::pow(static_cast<double>(k), deg);
                    if (k < 0) minus = chi * std::pow(static_cast<double>(-k), deg);
                }
                for (const auto& [m, c] : h.branch_plus().coeffs()) {
                    const long j = k + m;
                    if (j >= -K && j <= K) A(j + K, k + K) += c * plus * qfac;
                }
                for (const auto& [m, c] : h.branch_minus().coeffs()) {
                    const long j = k + m;
                    if (j >= -K && j <= K) A(j + K, k + K) += c * minus * qfac;
                }
            }
        }
    }
    return A;
}

Eigen::MatrixXcd build_sampled(const SymbolExpr& a, const ClassicalSymbol& p,
                               std::complex<double> lambda, long K,
                               int oversample) {
    const long n = 2 * K + 1;
    const long N = oversample * n;
    const double h = 2.0 * std::numbers::pi / static_cast<double>(N);
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
    std::vector<std::complex<double>> vals(static_cast<size_t>(N));
    for (long k = -K; k <= K; ++k) {
        const double xi = static_cast<double>(k);
        for (long m = 0; m < N; ++m)
            vals[static_cast<size_t>(m)] = a.eval(p, h * static_cast<double>(m), xi, lambda);
        for (long j = -K; j <= K; ++j) {
            const long r = j - k;  // x-frequency of this entry
            std::complex<double> acc = 0.0;
            for (long m = 0; m < N; ++m) {
                const double ang = -h * static_cast<double>(m * r);
                acc += vals[static_cast<size_t>(m)] *
                       std::complex<double>(std::cos(ang), std::sin(ang));
            }
            A(j + K, k + K) = acc / static_cast<double>(N);
        }
    }
    return A;
}

}  // namespace

Eigen::MatrixXcd build_matrix(const SymbolExpr& a, const ClassicalSymbol& p,
                              std::complex<double> lambda, long K,
                              int oversample) {
    if (principal_is_constant(p)) return build_exact(a, p, lambda, K);
    return build_sampled(a, p, lambda, K, oversample);
}

bool is_hermitian(const Eigen::MatrixXcd& A, double tol) {
    return (A - A.adjoint()).cwiseAbs().maxCoeff() <=
           tol * (1.0 + A.cwiseAbs().maxCoeff());
}

Eigen::VectorXcd matrix_spectrum(const Eigen::MatrixXcd& A) {
    if (is_hermitian(A)) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A);
        return es.eigenvalues().cast<std::complex<double>>();
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A);
    return es.eigenvalues();
}

double matrix_gamma(const Eigen::MatrixXcd& A) {
    const Eigen::VectorXcd ev = matrix_spectrum(A);
    double g = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < ev.size(); ++i) g = std::min(g, ev[i].real());
    return g;
}

SemigroupCalculator::SemigroupCalculator(Eigen::MatrixXcd A)
    : A_(std::move(A)), herm_(is_hermitian(A_)) {
    if (herm_) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A_);
        evals_ = es.eigenvalues();
        evecs_ = es.eigenvectors();
    }
}

Eigen::MatrixXcd SemigroupCalculator::operator()(std::complex<double> t) const {
    if (herm_) {
        Eigen::VectorXcd d(evals_.size());
        for (Eigen::Index i = 0; i < evals_.size(); ++i)
            d[i] = std::exp(-t * evals_[i]);
        return evecs_ * d.asDiagonal() * evecs_.adjoint();
    }
    return (-t * A_).exp();
}

Eigen::MatrixXcd kernel_from_semigroup(const Eigen::MatrixXcd& E,
                                       const std::vector<double>& xs,
                                       const std::vector<double>& ys) {
    const long n = E.rows();
    const long K = (n - 1) / 2;
    Eigen::MatrixXcd Px(static_cast<Eigen::Index>(xs.size()), n);
    Eigen::MatrixXcd Py(static_cast<Eigen::Index>(ys.size()), n);
    for (size_t i = 0; i < xs.size(); ++i)
        for (long a = -K; a <= K; ++a)
            Px(static_cast<Eigen::Index>(i), a + K) =
                std::exp(kI * (static_cast<double>(a) * xs[i]));
    for (size_t i = 0; i < ys.size(); ++i)
        for (long b = -K; b <= K; ++b)
            Py(static_cast<Eigen::Index>(i), b + K) =
                std::exp(kI * (static_cast<double>(b) * ys[i]));
    return Px * E * Py.adjoint() / (2.0 * std::numbers::pi);
}

std::vector<std::complex<double>> apply_semigroup(const Eigen::MatrixXcd& E,
                                                  const TrigPoly& u,
                                                  const std::vector<double>& xs) {
    const long n = E.rows();
    const long K = (n - 1) / 2;
    Eigen::VectorXcd uh = Eigen::VectorXcd::Zero(n);
    for (const auto& [m, c] : u.coeffs()) {
        if (m < -K || m > K)
            throw truncation_error("input bandwidth exceeds matrix truncation");
        uh[m + K] = c;
    }
    const Eigen::VectorXcd v = E * uh;
    std::vector<std::complex<double>> out(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        std::complex<double> acc = 0.0;
        for (long a = -K; a <= K; ++a)
            acc += v[a + K] * std::exp(kI * (static_cast<double>(a) * xs[i]));
        out[i] = acc;
    }
    return out;
}

}  // namespace heatkern
