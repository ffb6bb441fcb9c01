#include "heatkern/spectral.hpp"

#include <cmath>

#include "heatkern/errors.hpp"

namespace heatkern {

const char* route_name(Route r) {
    switch (r) {
        case Route::spectral: return "spectral";
        case Route::contour: return "contour";
        case Route::subordination: return "subordination";
        case Route::closed_form: return "closed_form";
    }
    return "unknown";
}

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

// Incremental cos/sin over k = 1, 2, ... with periodic resync so the
// three-term drift stays near machine precision over millions of steps.
class PhaseWalker {
  public:
    explicit PhaseWalker(double delta)
        : delta_(delta), cd_(std::cos(delta)), sd_(std::sin(delta)) {
        reset(1);
    }
    double c() const { return c_; }
    double s() const { return s_; }
    void advance() {
        ++k_;
        if ((k_ & 4095) == 0) {
            reset(k_);
            return;
        }
        const double c1 = c_ * cd_ - s_ * sd_;
        s_ = s_ * cd_ + c_ * sd_;
        c_ = c1;
    }

  private:
    void reset(long k) {
        k_ = k;
        // reduce k*delta mod 2pi before the trig call to keep accuracy
        const double a = std::fmod(static_cast<double>(k) * delta_, kTwoPi);
        c_ = std::cos(a);
        s_ = std::sin(a);
    }
    double delta_, cd_, sd_, c_, s_;
    long k_ = 1;
};

// Tail mass estimate: sum |e^{-t p(k)}| beyond the cutoff, first mode by
// mode, then in geometrically widening blocks scored at their left edge.
// Left-edge scoring overestimates a decaying sequence, so the result is a
// usable upper estimate even for slowly decaying low-order symbols.
double tail_estimate(const MultiplierSymbol& p, std::complex<double> t,
                     long kmax) {
    double tail = 0.0;
    long k = kmax + 1;
    for (; k <= kmax + 512; ++k) {
        const double term = std::exp(-(t * p.value(k)).real()) +
                            std::exp(-(t * p.value(-k)).real());
        tail += term;
        if (term < 1e-7 * tail && k > kmax + 16) return tail / kTwoPi;
    }
    double stride = 64.0;
    for (int block = 0; block < 4000; ++block) {
        const double term = std::exp(-(t * p.value(k)).real()) +
                            std::exp(-(t * p.value(-k)).real());
        const double add = term * stride;
        tail += add;
        if ((add < 1e-7 * tail && block > 4) || term < 1e-300) break;
        k += static_cast<long>(stride);
        stride *= 1.25;
    }
    return tail / kTwoPi;
}

// Same walk for the abstract decay profile e^{-re_t * ell * k^order}; used
// to size cutoffs so the whole dropped mass, not just the first dropped
// term, sits below tolerance.
double model_tail(double ell_const, double order, double re_t, double kmax) {
    auto f = [&](double k) {
        const double e = re_t * ell_const * std::pow(k, order);
        return e > 745.0 ? 0.0 : 2.0 * std::exp(-e);
    };
    double tail = 0.0;
    double k = kmax + 1.0;
    double stride = 1.0;
    for (int block = 0; block < 6000; ++block) {
        const double add = f(k) * stride;
        tail += add;
        if ((add < 1e-7 * tail && block > 8) || add == 0.0) break;
        k += stride;
        if (block > 256) stride *= 1.25;
    }
    return tail / kTwoPi;
}

}  // namespace

long default_kmax(double ell_const, double order, double re_t, double tol,
                  long hard_cap) {
    if (!(ell_const > 0.0) || !(order > 0.0) || !(re_t > 0.0))
        throw config_error("default_kmax: needs positive ellipticity, order, Re t");
    // termwise target first, then grow until the estimated dropped mass
    // (which scales like tol times the width of the decay shoulder) clears
    // the tolerance with margin
    const double target = std::log(1.0 / tol) / (ell_const * re_t);
    double k = std::max(16.0, std::pow(target, 1.0 / order));
    while (true) {
        if (!(k < static_cast<double>(hard_cap)))
            throw truncation_error("default_kmax: cutoff exceeds hard cap");
        if (model_tail(ell_const, order, re_t, k) < 0.5 * tol) break;
        k = std::ceil(k * 1.2);
    }
    return static_cast<long>(std::ceil(k));
}

long derivative_kmax(double ell_const, double order, double re_t, int j, int g,
                     double tol) {
    // grow the plain cutoff until the polynomial factors are absorbed:
    // (c K^d)^j K^g exp(-Re t c K^d) < tol
    long K = default_kmax(ell_const, order, re_t, tol);
    for (int it = 0; it < 200; ++it) {
        const double cd = ell_const * std::pow(static_cast<double>(K), order);
        const double lg = static_cast<double>(j) * std::log(std::max(cd, 1.0)) +
                          static_cast<double>(g) * std::log(static_cast<double>(K)) -
                          re_t * cd;
        if (lg < std::log(tol)) return K;
        K = static_cast<long>(std::ceil(static_cast<double>(K) * 1.2));
    }
    throw truncation_error("derivative_kmax: no admissible cutoff found");
}

std::vector<std::complex<double>> multiplier_kernel_row(
    const MultiplierSymbol& p, const std::vector<double>& deltas,
    std::complex<double> t, long kmax, double* tail_out) {
    if (p.dim() != 1)
        throw config_error("multiplier_kernel_row: circle symbols only");
    const std::size_t nd = deltas.size();
    std::vector<std::complex<double>> row(nd, {0.0, 0.0});

    const bool real_path = p.even() && t.imag() == 0.0;
    if (real_path) {
        // p(-k) = p(k) and real t: row = c0 + 2 sum_k c_k cos(k delta)
        std::vector<double> ck(static_cast<std::size_t>(kmax) + 1);
        bool all_real = true;
        for (long k = 0; k <= kmax; ++k) {
            const std::complex<double> v = p.value(k);
            if (v.imag() != 0.0) {
                all_real = false;
                break;
            }
            ck[static_cast<std::size_t>(k)] = std::exp(-t.real() * v.real());
        }
        if (all_real) {
            for (std::size_t i = 0; i < nd; ++i) {
                double acc = ck[0];
                PhaseWalker w(deltas[i]);
                for (long k = 1; k <= kmax; ++k) {
                    acc += 2.0 * ck[static_cast<std::size_t>(k)] * w.c();
                    w.advance();
                }
                row[i] = acc / kTwoPi;
            }
            if (tail_out) *tail_out = tail_estimate(p, t, kmax);
            return row;
        }
    }

    std::vector<std::complex<double>> ck(2 * static_cast<std::size_t>(kmax) + 1);
    for (long k = -kmax; k <= kmax; ++k)
        ck[static_cast<std::size_t>(k + kmax)] = std::exp(-t * p.value(k));
    for (std::size_t i = 0; i < nd; ++i) {
        std::complex<double> acc = ck[static_cast<std::size_t>(kmax)];
        PhaseWalker w(deltas[i]);
        for (long k = 1; k <= kmax; ++k) {
            const std::complex<double> ph(w.c(), w.s());
            acc += ck[static_cast<std::size_t>(kmax + k)] * ph +
                   ck[static_cast<std::size_t>(kmax - k)] * std::conj(ph);
            w.advance();
        }
        row[i] = acc / kTwoPi;
    }
    if (tail_out) *tail_out = tail_estimate(p, t, kmax);
    return row;
}

std::vector<std::complex<double>> multiplier_derivative_row(
    const MultiplierSymbol& p, const std::vector<double>& deltas,
    std::complex<double> t, int j, int g, long kmax, double* tail_out) {
    if (p.dim() != 1)
        throw config_error("multiplier_derivative_row: circle symbols only");
    if (j < 0 || g < 0)
        throw config_error("multiplier_derivative_row: orders must be >= 0");
    const std::size_t nd = deltas.size();
    std::vector<std::complex<double>> row(nd, {0.0, 0.0});
    std::vector<std::complex<double>> ck(2 * static_cast<std::size_t>(kmax) + 1);
    double tail = 0.0;
    for (long k = -kmax; k <= kmax; ++k) {
        const std::complex<double> pk = p.value(k);
        std::complex<double> f = std::exp(-t * pk);
        for (int a = 0; a < j; ++a) f *= -pk;
        const std::complex<double> ik(0.0, static_cast<double>(k));
        for (int a = 0; a < g; ++a) f *= ik;
        ck[static_cast<std::size_t>(k + kmax)] = f;
    }
    // crude tail gauge with the derivative weights included
    for (long k = kmax + 1; k <= kmax + 2048; ++k) {
        double term = 0.0;
        for (long sign : {1L, -1L}) {
            const std::complex<double> pk = p.value(sign * k);
            term += std::exp(-(t * pk).real()) * std::pow(std::abs(pk), j) *
                    std::pow(static_cast<double>(k), g);
        }
        tail += term;
        if (term < 1e-4 * tail && k > kmax + 16) break;
    }
    for (std::size_t i = 0; i < nd; ++i) {
        std::complex<double> acc = ck[static_cast<std::size_t>(kmax)];
        PhaseWalker w(deltas[i]);
        for (long k = 1; k <= kmax; ++k) {
            const std::complex<double> ph(w.c(), w.s());
            acc += ck[static_cast<std::size_t>(kmax + k)] * ph +
                   ck[static_cast<std::size_t>(kmax - k)] * std::conj(ph);
            w.advance();
        }
        row[i] = acc / kTwoPi;
    }
    if (tail_out) *tail_out = tail / kTwoPi;
    return row;
}

std::complex<double> multiplier_kernel_torus(const MultiplierSymbol& p,
                                             double d1, double d2,
                                             std::complex<double> t,
                                             long kmax) {
    if (p.dim() != 2)
        throw config_error("multiplier_kernel_torus: torus symbols only");
    std::complex<double> acc(0.0, 0.0);
    for (long k1 = -kmax; k1 <= kmax; ++k1) {
        // radial cutoff k1^2 + k2^2 <= kmax^2
        const long m2 = static_cast<long>(
            std::floor(std::sqrt(std::max(0.0, static_cast<double>(kmax * kmax - k1 * k1)))));
        for (long k2 = -m2; k2 <= m2; ++k2) {
            acc += std::exp(-t * p.value(k1, k2)) *
                   std::polar(1.0, k1 * d1 + k2 * d2);
        }
    }
    return acc / (kTwoPi * kTwoPi);
}

KernelGrid heat_kernel_spectral(const MultiplierSymbol& p,
                                const std::vector<double>& deltas,
                                const std::vector<std::complex<double>>& ts,
                                double tol, long kmax_override) {
    KernelGrid g;
    g.x = deltas;
    g.y = {0.0};
    g.t = ts;
    g.route = Route::spectral;
    g.allocate();
    const double ell = p.ellipticity_constant();
    for (std::size_t it = 0; it < ts.size(); ++it) {
        if (ts[it] == 0.0) {
            // the t = 0 slice is the identity; flag it and leave zeros
            g.identity_slice[it] = true;
            continue;
        }
        if (!(ts[it].real() > 0.0))
            throw config_error("heat_kernel_spectral: Re t must be positive");
        const long kmax = kmax_override > 0
                              ? kmax_override
                              : default_kmax(ell, p.order(), ts[it].real(), tol);
        double tail = 0.0;
        auto row = multiplier_kernel_row(p, deltas, ts[it], kmax, &tail);
        if (kmax_override == 0 && tail > 64.0 * tol)
            throw truncation_error("heat_kernel_spectral: tail above tolerance");
        for (std::size_t ix = 0; ix < deltas.size(); ++ix)
            g.at(it, ix, 0) = row[ix];
        g.kmax = std::max(g.kmax, kmax);
        g.tail_bound = std::max(g.tail_bound, tail);
    }
    return g;
}

double gaussian_circle_kernel(double delta, double tau) {
    if (!(tau > 0.0)) throw config_error("gaussian_circle_kernel: tau > 0");
    const long m_max =
        static_cast<long>(std::ceil((std::sqrt(4.0 * tau * 42.0) + kPi) / kTwoPi)) + 1;
    const double pref = 1.0 / std::sqrt(4.0 * kPi * tau);
    double s = 0.0;
    for (long m = -m_max; m <= m_max; ++m) {
        const double r = delta + kTwoPi * m;
        s += std::exp(-r * r / (4.0 * tau));
    }
    return pref * s;
}

double gaussian_torus_kernel(double d1, double d2, double tau) {
    return gaussian_circle_kernel(d1, tau) * gaussian_circle_kernel(d2, tau);
}

double gaussian_circle_kernel_fourier(double delta, double tau, long kmax) {
    double s = 1.0;
    for (long k = 1; k <= kmax; ++k)
        s += 2.0 * std::exp(-tau * k * k) * std::cos(k * delta);
    return s / kTwoPi;
}

double dn_heat_kernel_closed(double theta, double theta_prime, double t) {
    if (!(t > 0.0)) throw config_error("dn_heat_kernel_closed: t > 0");
    const double r = std::exp(-t);
    const double den = 1.0 - 2.0 * r * std::cos(theta - theta_prime) + r * r;
    return (1.0 - r * r) / den / kTwoPi;
}

}  // namespace heatkern
