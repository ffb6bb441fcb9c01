#include "heatkern/subordination.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "heatkern/errors.hpp"
#include "heatkern/quadrature.hpp"
#include "heatkern/spectral.hpp"

namespace heatkern {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Crossover between the positive-integrand form (below) and the alternating
// series (above). At this point the largest series term is O(1) relative to
// the sum for every alpha in (0,1), so both sides hold full precision.
constexpr double kSeriesSwitch = 2.6;

void check_alpha(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw config_error("stable index alpha = d/2 must lie in (0,1)");
}

// log A(psi) for the positive-integrand representation,
//   A(psi) = [sin(a psi)/sin psi]^{a/(1-a)} [sin((1-a) psi)/sin psi].
// Finite limit a^{a/(1-a)} (1-a) at psi = 0; blows up like sin(psi)^{-1/(1-a)}
// at psi = pi, where the exp(-z A) factor kills the integrand.
double log_A(double alpha, double psi) {
    const double r = alpha / (1.0 - alpha);
    return r * std::log(std::sin(alpha * psi)) +
           std::log(std::sin((1.0 - alpha) * psi)) -
           (1.0 + r) * std::log(std::sin(psi));
}

// eta_1(s) for s below the series switch. Every factor is positive, so the
// only numerical concerns are under/overflow, handled in log space.
double eta1_kanter(double alpha, double s) {
    const double r = alpha / (1.0 - alpha);
    const double ln_z = -r * std::log(s);  // z = s^{-a/(1-a)}
    // prefactor (a/(1-a)) s^{-1/(1-a)}
    const double ln_scale = std::log(r) - (1.0 / (1.0 - alpha)) * std::log(s);

    if (ln_z > 690.0) return 0.0;  // exp(-z A) underflows for all psi
    const double z = std::exp(ln_z);
    const double A0 = std::pow(alpha, r) * (1.0 - alpha);
    // Peak of A e^{-zA} over the range is at most max(A0 e^{-z A0}, 1/(e z));
    // if even a generous bound on log eta underflows, return zero outright.
    const double ln_peak = std::max(std::log(A0) - z * A0, -std::log(z) - 1.0);
    if (ln_scale + ln_peak + std::log(kPi) < -740.0) return 0.0;

    auto f = [&](double psi) -> double {
        if (psi <= 0.0 || psi >= kPi) return 0.0;
        const double la = log_A(alpha, psi);
        if (la > 690.0) return 0.0;  // A overflows; e^{-zA} is then zero
        const double A = std::exp(la);
        const double w = z * A;
        if (w > 745.0) return 0.0;
        return A * std::exp(-w);
    };
    const double I =
        integrate_adaptive(f, 0.0, kPi, 1e-280, 1e-11, 52);
    if (!(I > 0.0)) return 0.0;
    return std::exp(ln_scale + std::log(I) - std::log(kPi));
}

struct SeriesCoeffs {
    // c_k = Gamma(k a + 1)/k! sin(pi k a)/pi, signs folded in:
    // eta_1(s) = sum_k (-1)^{k+1} c_k s^{-k a - 1}
    std::vector<double> log_mag;  // log |Gamma(k a + 1)/k!|
    std::vector<double> sin_pa;   // sin(pi k a)
};

const SeriesCoeffs& series_coeffs(double alpha) {
    static std::map<double, SeriesCoeffs> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(alpha);
    if (it != cache.end()) return it->second;
    SeriesCoeffs c;
    const int kmax = 400;
    c.log_mag.resize(kmax + 1, 0.0);
    c.sin_pa.resize(kmax + 1, 0.0);
    for (int k = 1; k <= kmax; ++k) {
        c.log_mag[k] = std::lgamma(k * alpha + 1.0) - std::lgamma(k + 1.0);
        c.sin_pa[k] = std::sin(kPi * k * alpha);
    }
    return cache.emplace(alpha, std::move(c)).first->second;
}

// Convergent series for eta_1, accurate once s is above the switch point.
double eta1_series(double alpha, double s) {
    const SeriesCoeffs& c = series_coeffs(alpha);
    const double ln_s = std::log(s);
    double sum = 0.0;
    for (int k = 1; k < static_cast<int>(c.log_mag.size()); ++k) {
        const double ln_mag = c.log_mag[k] - (k * alpha + 1.0) * ln_s;
        const double mag = (ln_mag < -745.0) ? 0.0 : std::exp(ln_mag);
        const double term = (k & 1 ? 1.0 : -1.0) * mag * c.sin_pa[k] / kPi;
        sum += term;
        if (k > 8 && mag < 1e-17 * std::max(std::abs(sum), 1e-300)) break;
    }
    return std::max(sum, 0.0);
}

}  // namespace

double eta_d1(double t, double s) {
    if (!(t > 0.0)) throw config_error("eta_d1 requires t > 0");
    if (s <= 0.0) return 0.0;
    const double e = t * t / (4.0 * s);
    if (e > 745.0) return 0.0;
    return 0.5 / std::sqrt(kPi) * t * std::exp(-e) / (s * std::sqrt(s));
}

double eta1_stable(double alpha, double s) {
    check_alpha(alpha);
    if (s <= 0.0) return 0.0;
    return (s < kSeriesSwitch) ? eta1_kanter(alpha, s) : eta1_series(alpha, s);
}

double eta_general(double d, double t, double s) {
    if (!(d > 0.0) || !(d < 2.0))
        throw config_error("subordination requires order d in (0,2)");
    if (!(t > 0.0)) throw config_error("eta_general requires t > 0");
    const double T = std::pow(t, 2.0 / d);  // eta_t(s) = eta_1(s/T)/T
    return eta1_stable(d / 2.0, s / T) / T;
}

double laplace_identity_relerr(double d, double t, double lambda) {
    if (!(d > 0.0) || !(d < 2.0))
        throw config_error("subordination requires order d in (0,2)");
    if (!(t > 0.0) || !(lambda > 0.0))
        throw config_error("laplace identity check requires t, lambda > 0");
    const double alpha = d / 2.0;
    const double beta = lambda * std::pow(t, 2.0 / d);
    const double exact = std::exp(-t * std::pow(lambda, alpha));
    // Scaling reduces the check to int_0^inf e^{-beta u} eta_1(u) du;
    // beyond U the integrand is below e^{-50} times the remaining eta mass.
    const double U = std::max(200.0, 50.0 / beta);
    auto f = [&](double u) -> double {
        if (u <= 0.0) return 0.0;
        const double e = eta1_stable(alpha, u);
        if (e <= 0.0) return 0.0;
        return std::exp(-beta * u) * e;
    };
    // Integrate over a doubling ladder of segments. A single pass over
    // [0, U] can step right over the integrand's support when beta is
    // large (the product peaks at u ~ 1/beta inside a domain of width
    // 50/beta at least 200), and a quadrature that only sees zeros
    // converges happily to zero.
    double I = 0.0;
    double lo = 0.0;
    double hi = std::min(U, 1e-3 * std::min(1.0, 1.0 / beta));
    while (lo < U) {
        I += integrate_adaptive(f, lo, hi, 1e-16, 1e-10, 52);
        lo = hi;
        hi = std::min(U, 2.0 * hi);
    }
    return std::abs(I - exact) / exact;
}

double eta1_tail_mass(double alpha, double U) {
    check_alpha(alpha);
    if (!(U >= 2.0))
        throw config_error("eta1_tail_mass needs U in the series regime");
    const SeriesCoeffs& c = series_coeffs(alpha);
    const double ln_U = std::log(U);
    double sum = 0.0;
    for (int k = 1; k < static_cast<int>(c.log_mag.size()); ++k) {
        const double ka = k * alpha;
        const double ln_mag = c.log_mag[k] - ka * ln_U;
        const double mag = (ln_mag < -745.0) ? 0.0 : std::exp(ln_mag);
        const double term =
            (k & 1 ? 1.0 : -1.0) * mag * c.sin_pa[k] / (kPi * ka);
        sum += term;
        if (k > 8 && mag < 1e-17 * std::max(std::abs(sum), 1e-300)) break;
    }
    return std::clamp(sum, 0.0, 1.0);
}

TailReport tail_asymptotics_check(double d, double t,
                                  const std::vector<double>& s_grid) {
    if (s_grid.empty()) throw config_error("tail check needs a nonempty grid");
    TailReport rep{1e300, -1e300};
    for (double s : s_grid) {
        if (!(s > 0.0)) throw config_error("tail check grid must be positive");
        const double ref = t * std::pow(s, -1.0 - d / 2.0);
        const double ratio = eta_general(d, t, s) / ref;
        rep.ratio_min = std::min(rep.ratio_min, ratio);
        rep.ratio_max = std::max(rep.ratio_max, ratio);
    }
    return rep;
}

double subordinated_kernel(double d, double x, double y, double t, int n) {
    if (!(d > 0.0) || !(d < 2.0))
        throw config_error("subordination requires order d in (0,2)");
    if (!(t > 0.0)) throw config_error("subordinated kernel requires t > 0");
    if (n != 1 && n != 2)
        throw config_error("subordinated kernel supports n = 1 or 2");
    const double alpha = d / 2.0;
    const double T = std::pow(t, 2.0 / d);
    // In the scaled variable tau = T u the Gaussian factor has settled to the
    // equilibrium constant once T u >= 45; past U1 substitute it exactly.
    const double U1 = std::max(3.0, 45.0 / T);
    const double eq = std::pow(2.0 * kPi, -n);
    // For n = 2 the two arguments are the offset components on the torus.
    auto f = [&](double u) -> double {
        if (u <= 0.0) return 0.0;
        const double e = eta1_stable(alpha, u);
        if (e <= 0.0) return 0.0;
        const double g = (n == 1) ? gaussian_circle_kernel(x - y, T * u)
                                  : gaussian_torus_kernel(x, y, T * u);
        return g * e;
    };
    const double I = integrate_adaptive(f, 0.0, U1, 1e-12, 1e-9, 52);
    return I + eq * eta1_tail_mass(alpha, U1);
}

}  // namespace heatkern
