#include "heatkern/parametrix.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "heatkern/errors.hpp"
#include "heatkern/operator_matrix.hpp"

namespace heatkern {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

// d_x^alpha of the degree-(d-k) part of p; k = 0 means the principal part
// (the spectral shift drops out as soon as alpha >= 1).
bool dx_pow_factor(const ClassicalSymbol& p, int k, int alpha, HomogTerm& out) {
    const HomogTerm* src = nullptr;
    HomogTerm tmp = HomogTerm::unit();
    if (k == 0) {
        tmp = p.principal();
        src = &tmp;
    } else {
        const HomogTerm* pk = p.term_at_degree(p.order() - static_cast<double>(k));
        if (!pk) return false;
        tmp = *pk;
        src = &tmp;
    }
    HomogTerm f = *src;
    for (int a = 0; a < alpha; ++a) f = f.d_x();
    if (f.is_zero()) return false;
    out = f;
    return true;
}

}  // namespace

std::vector<SymbolExpr> resolvent_terms(const ClassicalSymbol& p, int L) {
    if (L < 1) throw config_error("expansion length must be >= 1");
    std::vector<SymbolExpr> terms;
    terms.reserve(static_cast<size_t>(L));
    terms.push_back(SymbolExpr::from_term(HomogTerm::unit(), 1));

    const HomogTerm dxi_p0 = p.principal().d_xi();
    for (int m = 1; m < L; ++m) {
        SymbolExpr acc;
        for (int l = 0; l < m; ++l) {
            const int r = m - l;  // alpha + k
            SymbolExpr da = terms[static_cast<size_t>(l)];
            double fact = 1.0;
            for (int alpha = 0; alpha <= r; ++alpha) {
                if (alpha > 0) {
                    da = da.D_xi(dxi_p0);
                    fact *= static_cast<double>(alpha);
                }
                const int k = r - alpha;
                if (k == 0 && alpha == 0) continue;  // unreachable for l < m
                HomogTerm f = HomogTerm::unit();
                if (!dx_pow_factor(p, k, alpha, f)) continue;
                acc.add(da.mul_trig_term(f).scaled(1.0 / fact));
            }
        }
        // solve  q_m (p0 - lambda) + acc = 0
        terms.push_back(acc.mul_q().scaled(-1.0));
    }
    return terms;
}

SymbolExpr recursion_residual(const ClassicalSymbol& p,
                              const std::vector<SymbolExpr>& terms, int m) {
    if (m < 0 || m >= static_cast<int>(terms.size()))
        throw config_error("identity index outside the computed expansion");
    SymbolExpr acc;
    const HomogTerm dxi_p0 = p.principal().d_xi();
    for (int l = 0; l <= m; ++l) {
        const int r = m - l;
        SymbolExpr da = terms[static_cast<size_t>(l)];
        double fact = 1.0;
        for (int alpha = 0; alpha <= r; ++alpha) {
            if (alpha > 0) {
                da = da.D_xi(dxi_p0);
                fact *= static_cast<double>(alpha);
            }
            const int k = r - alpha;
            if (k == 0 && alpha == 0) {
                acc.add(da.mul_principal_minus_lambda());
                continue;
            }
            HomogTerm f = HomogTerm::unit();
            if (!dx_pow_factor(p, k, alpha, f)) continue;
            acc.add(da.mul_trig_term(f).scaled(1.0 / fact));
        }
    }
    if (m == 0) acc.add(0, HomogTerm::unit().scaled(-1.0));
    return acc;
}

std::complex<double> heat_term_eval(const ClassicalSymbol& p,
                                    const SymbolExpr& q_l, double x, double xi,
                                    std::complex<double> t) {
    // q^j contributes t^{j-1}/(j-1)! against the common decay factor
    const std::complex<double> ep = std::exp(-t * p.principal().eval(x, xi));
    std::complex<double> poly = 0.0;
    for (const auto& [j, hs] : q_l.parts()) {
        if (j < 1)
            throw config_error("heat substitution needs pure resolvent powers");
        double w = 1.0;  // t^{j-1}/(j-1)! accumulated below
        std::complex<double> tp = 1.0;
        for (int a = 1; a < j; ++a) {
            tp *= t;
            w /= static_cast<double>(a);
        }
        std::complex<double> c = 0.0;
        for (const auto& h : hs) c += h.eval(x, xi);
        poly += c * tp * w;
    }
    return poly * ep;
}

std::complex<double> term_kernel(const ClassicalSymbol& p, const SymbolExpr& q_l,
                                 double x, double y, std::complex<double> t,
                                 long kmax) {
    std::complex<double> acc = 0.0;
    for (long k = -kmax; k <= kmax; ++k) {
        const double xi = static_cast<double>(k);
        const std::complex<double> v = heat_term_eval(p, q_l, x, xi, t);
        if (v == 0.0) continue;
        acc += v * std::exp(kI * (xi * (x - y)));
    }
    // geometric tail estimate from the last two magnitudes on each side
    const double vK = std::abs(heat_term_eval(p, q_l, x, static_cast<double>(kmax), t)) +
                      std::abs(heat_term_eval(p, q_l, x, static_cast<double>(-kmax), t));
    const double vK1 = std::abs(heat_term_eval(p, q_l, x, static_cast<double>(kmax - 1), t)) +
                       std::abs(heat_term_eval(p, q_l, x, static_cast<double>(-(kmax - 1)), t));
    if (vK > 0.0 && vK1 > 0.0) {
        const double r = vK / vK1;
        const double tail = r < 0.9 ? vK * r / (1.0 - r) : 1e300;
        if (tail > 1e-8)
            throw truncation_error("mode cutoff too small for requested heat term");
    }
    return acc / (2.0 * std::numbers::pi);
}

std::complex<double> remainder_kernel(const MultiplierSymbol& exact,
                                      const ClassicalSymbol& p, int M, double x,
                                      double y, std::complex<double> t,
                                      long kmax) {
    if (exact.dim() != 1)
        throw config_error("expansion remainders are computed on the circle");
    const auto terms = resolvent_terms(p, M);
    std::complex<double> acc = 0.0;
    // one mode loop so the near-cancelling tails subtract before accumulation
    for (long k = -kmax; k <= kmax; ++k) {
        const double xi = static_cast<double>(k);
        std::complex<double> diff = std::exp(-t * exact.value(k));
        for (const auto& q_l : terms) diff -= heat_term_eval(p, q_l, x, xi, t);
        acc += diff * std::exp(kI * (xi * (x - y)));
    }
    return acc / (2.0 * std::numbers::pi);
}

ResidualReport parametrix_residual(const ClassicalSymbol& p, int L,
                                   std::complex<double> lambda, long K,
                                   long pad) {
    if (K < 4) throw config_error("matrix truncation too small");
    const long Kp = K + pad;
    const long n = 2 * Kp + 1;
    const auto terms = resolvent_terms(p, L);

    const Eigen::MatrixXcd A = build_matrix(p, Kp);
    Eigen::MatrixXcd Q = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& q_l : terms) Q += build_matrix(q_l, p, lambda, Kp);

    Eigen::MatrixXcd R = Q * (A - lambda * Eigen::MatrixXcd::Identity(n, n)) -
                         Eigen::MatrixXcd::Identity(n, n);
    const long nc = 2 * K + 1;
    const Eigen::MatrixXcd Rc = R.block(pad, pad, nc, nc);

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(Rc);
    const double norm = svd.singularValues()(0);

    const Eigen::VectorXcd spectrum = matrix_spectrum(A);
    double dist = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < spectrum.size(); ++i)
        dist = std::min(dist, std::abs(lambda - spectrum[i]));
    if (dist < 1e-6 * (1.0 + std::abs(lambda)))
        throw contour_error("spectral parameter too close to the truncated spectrum");
    return {norm, dist};
}

}  // namespace heatkern
