#include "heatkern/contour.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "heatkern/errors.hpp"
#include "heatkern/operator_matrix.hpp"
#include "heatkern/quadrature.hpp"
#include "heatkern/spectral.hpp"

namespace heatkern {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;
constexpr double kLogTail = 41.4;  // e^{-41.4} ~ 1e-18 at the ray ends

struct Panel {
    double a, b;
    int n;
};

// Ray panels in the scaled variable u = |t| r. psi is the angle between the
// ray direction and the direction of steepest e^{-t lambda} decay, so the
// integrand behaves like e^{-u cos psi} e^{-i u sin psi} * (smooth).
std::vector<Panel> ray_panels(double u0, double cos_psi, double sin_psi) {
    const double umax = kLogTail / cos_psi;
    std::vector<Panel> ps;
    double u = u0;
    // geometric refinement handles the resolvent's vertex variation
    while (u < 1.0 && 2.0 * u < umax) {
        const double nxt = std::min({2.0 * u, 1.0, umax});
        ps.push_back({u, nxt, 5});
        u = nxt;
    }
    if (u < 8.0 && u < umax) {
        const double nxt = std::min(8.0, umax);
        ps.push_back({u, nxt, 26});
        u = nxt;
    }
    while (u < umax) {
        // cap the phase span per panel near 45 radians
        const double span_cap =
            std::abs(sin_psi) > 1e-12 ? 45.0 / std::abs(sin_psi) : umax;
        const double nxt = std::min(u + span_cap, umax);
        const double phase = (nxt - u) * std::abs(sin_psi);
        ps.push_back({u, nxt, std::max(16, static_cast<int>(std::ceil(0.62 * phase)) + 4)});
        u = nxt;
    }
    return ps;
}

void append_ray(ContourSpec& c, double beta, std::complex<double> dir_weight,
                const std::vector<Panel>& panels, double tmod, double scale) {
    const std::complex<double> e = std::polar(1.0, beta);
    for (const auto& pan : panels) {
        const int n = std::max(3, static_cast<int>(std::lround(pan.n * scale)));
        const GaussRule& gr = gauss_legendre(n);
        const double mid = 0.5 * (pan.a + pan.b) / tmod;
        const double half = 0.5 * (pan.b - pan.a) / tmod;
        for (int i = 0; i < n; ++i) {
            const double r = mid + half * gr.x[static_cast<size_t>(i)];
            c.nodes.push_back(r * e);
            c.weights.push_back(dir_weight * e *
                                (half * gr.w[static_cast<size_t>(i)]));
        }
    }
}

void append_arc(ContourSpec& c, double th_a, double th_b, int panels, int order,
                std::complex<double> sgn, double scale) {
    const int n = std::max(4, static_cast<int>(std::lround(order * scale)));
    const double w_pan = (th_b - th_a) / panels;
    for (int j = 0; j < panels; ++j) {
        const double a = th_a + j * w_pan;
        const GaussRule& gr = gauss_legendre(n);
        for (int i = 0; i < n; ++i) {
            const double th = a + 0.5 * w_pan * (1.0 + gr.x[static_cast<size_t>(i)]);
            const std::complex<double> lam = std::polar(c.r0, th);
            c.nodes.push_back(lam);
            c.weights.push_back(sgn * kI * lam * (0.5 * w_pan * gr.w[static_cast<size_t>(i)]));
        }
    }
}

double dist_to_ray(std::complex<double> mu, double beta, double r0,
                   double rmax) {
    const std::complex<double> w = mu * std::polar(1.0, -beta);
    if (w.real() >= r0 && w.real() <= rmax) return std::abs(w.imag());
    const std::complex<double> lo{r0, 0.0}, hi{rmax, 0.0};
    return std::min(std::abs(w - lo), std::abs(w - hi));
}

double dist_to_arc(std::complex<double> mu, double r0, bool long_arc,
                   double phi) {
    double ang = std::arg(mu);  // (-pi, pi]
    bool on_arc;
    if (long_arc) {
        on_arc = !(std::abs(ang) < phi);
    } else {
        on_arc = std::abs(ang) <= phi;
    }
    if (on_arc) return std::abs(std::abs(mu) - r0);
    const std::complex<double> e1 = std::polar(r0, phi);
    const std::complex<double> e2 = std::polar(r0, -phi);
    return std::min(std::abs(mu - e1), std::abs(mu - e2));
}

}  // namespace

ContourSpec make_contour(const std::vector<std::complex<double>>& spectrum,
                         std::complex<double> t, double margin, int nq,
                         double eps_prime, double phi_frac) {
    if (!(t.real() > 0.0))
        throw contour_error("contour requires Re t > 0");
    if (spectrum.empty()) throw contour_error("empty spectrum sample");
    const double theta = std::arg(t);
    const double tmod = std::abs(t);
    if (!(phi_frac > 0.0) || !(phi_frac < 1.0))
        throw contour_error("ray angle fraction outside (0,1)");
    const double phi = phi_frac * (kPi / 2.0 - std::abs(theta));

    double gamma = std::numeric_limits<double>::infinity();
    double sector = 0.0, rho_max = 0.0, gap = std::numeric_limits<double>::infinity();
    for (const auto& mu : spectrum) {
        gamma = std::min(gamma, mu.real());
        rho_max = std::max(rho_max, std::abs(mu));
        if (std::abs(mu) > 10.0 * margin) {
            sector = std::max(sector, std::abs(std::arg(mu)));
            gap = std::min(gap, std::abs(mu));
        }
    }
    if (gamma < -margin)
        throw contour_error("spectrum extends into the left half-plane");
    if (!(phi > sector + 0.5 * margin) || phi < 0.02)
        throw contour_error(
            "arg t too close to +-pi/2 for clearance at the requested margin");

    ContourSpec c;
    c.t = t;
    c.phi = phi;
    c.long_arc = gamma <= 2.0 * margin;
    if (c.long_arc) {
        c.r0 = std::min({eps_prime, 0.5 * gap, 3.0 / tmod});
        c.r0 = std::max(c.r0, 2.0 * margin);
    } else {
        // clearance proportional to the spectral gap, not just the margin
        // floor; a pole hugging the arc ruins the panel quadrature
        c.r0 = std::min({eps_prime, 0.5 * gamma, 3.0 / tmod});
        if (!(c.r0 > 0.0))
            throw contour_error("no room for the vertex arc below the spectrum");
    }

    // both rays decay; psi+/- are the angles between t and the rays
    const double cpos = std::cos(theta + phi), cneg = std::cos(theta - phi);
    if (!(cpos > 0.05) || !(cneg > 0.05))
        throw contour_error(
            "arg t too close to +-pi/2 for clearance at the requested margin");
    c.rmax = kLogTail / (tmod * std::min(cpos, cneg));

    const double u0 = tmod * c.r0;
    const auto pan_up = ray_panels(u0, cpos, std::sin(theta + phi));
    const auto pan_dn = ray_panels(u0, cneg, std::sin(theta - phi));
    int est = 0;
    for (const auto& p : pan_up) est += p.n;
    for (const auto& p : pan_dn) est += p.n;
    const int arc_panels = c.long_arc ? 6 : 1;
    const int arc_order = c.long_arc ? 8 : 12;
    est += arc_panels * arc_order;
    const double scale = static_cast<double>(nq) / static_cast<double>(est);

    // i/(2pi) folded into every weight
    const std::complex<double> pref = kI / (2.0 * kPi);
    // upper ray, traversed inward
    append_ray(c, phi, -pref, pan_up, tmod, scale);
    // vertex arc
    if (c.long_arc)
        append_arc(c, phi, 2.0 * kPi - phi, arc_panels, arc_order, pref, scale);
    else
        append_arc(c, -phi, phi, arc_panels, arc_order, -pref, scale);
    // lower ray, traversed outward
    append_ray(c, -phi, pref, pan_dn, tmod, scale);

    for (const auto& mu : spectrum) {
        const double d = std::min(
            {dist_to_ray(mu, phi, c.r0, c.rmax), dist_to_ray(mu, -phi, c.r0, c.rmax),
             dist_to_arc(mu, c.r0, c.long_arc, phi)});
        if (d < margin * (1.0 + std::abs(mu)))
            throw contour_error("contour clearance below margin at an eigenvalue");
    }
    return c;
}

ContourSpec make_contour(const MultiplierSymbol& p, long K,
                         std::complex<double> t, double margin, int nq,
                         double eps_prime, double phi_frac) {
    if (p.dim() != 1)
        throw config_error("contour route is implemented on the circle");
    std::vector<std::complex<double>> spectrum;
    spectrum.reserve(static_cast<size_t>(2 * K + 1));
    for (long k = -K; k <= K; ++k) spectrum.push_back(p.value(k));
    return make_contour(spectrum, t, margin, nq, eps_prime, phi_frac);
}

std::complex<double> contour_scalar(const ContourSpec& c,
                                    std::complex<double> mu) {
    std::complex<double> acc = 0.0;
    for (size_t q = 0; q < c.nodes.size(); ++q)
        acc += c.weights[q] * std::exp(-c.t * c.nodes[q]) / (mu - c.nodes[q]);
    return acc;
}

Eigen::MatrixXcd contour_semigroup_matrix(const Eigen::MatrixXcd& A,
                                          const ContourSpec& c) {
    const Eigen::Index n = A.rows();
    Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(n, n);
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
    for (size_t q = 0; q < c.nodes.size(); ++q) {
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A - c.nodes[q] * I);
        if (lu.rcond() < 1e-12)
            throw contour_error("resolvent solve condition estimate above 1e12");
        E += (c.weights[q] * std::exp(-c.t * c.nodes[q])) * lu.solve(I);
    }
    return E;
}

KernelGrid heat_kernel_contour(const MultiplierSymbol& p,
                               const std::vector<double>& deltas,
                               const std::vector<std::complex<double>>& ts,
                               double tol, int nq, long kmax_override) {
    if (p.dim() != 1)
        throw config_error("contour route is implemented on the circle");
    KernelGrid g;
    g.x = deltas;
    g.y = {0.0};
    g.t = ts;
    g.route = Route::contour;
    g.allocate();
    const double ell = p.ellipticity_constant();
    for (std::size_t it = 0; it < ts.size(); ++it) {
        const std::complex<double> t = ts[it];
        if (!(t.real() > 0.0))
            throw config_error("contour route needs Re t > 0");
        const long kmax = kmax_override > 0
                              ? kmax_override
                              : default_kmax(ell, p.order(), t.real(), tol);
        const ContourSpec c = make_contour(p, kmax, t, 1e-2, nq);
        // per-mode functional calculus, then synthesis over separations;
        // the node factors w_q e^{-t lambda_q} are shared across modes
        const size_t nqn = c.nodes.size();
        std::vector<std::complex<double>> f(nqn);
        for (size_t q = 0; q < nqn; ++q)
            f[q] = c.weights[q] * std::exp(-t * c.nodes[q]);
        std::vector<std::complex<double>> modes(static_cast<size_t>(2 * kmax + 1));
        for (long k = -kmax; k <= kmax; ++k) {
            const std::complex<double> mu = p.value(k);
            std::complex<double> acc = 0.0;
            for (size_t q = 0; q < nqn; ++q) acc += f[q] / (mu - c.nodes[q]);
            modes[static_cast<size_t>(k + kmax)] = acc;
        }
        for (std::size_t ix = 0; ix < deltas.size(); ++ix) {
            const double d = deltas[ix];
            const std::complex<double> step = std::polar(1.0, d);
            std::complex<double> acc = 0.0;
            std::complex<double> ph = std::polar(1.0, -static_cast<double>(kmax) * d);
            for (long k = -kmax; k <= kmax; ++k) {
                if (((k + kmax) & 4095) == 0)
                    ph = std::polar(1.0, std::fmod(static_cast<double>(k) * d,
                                                   2.0 * kPi));
                acc += modes[static_cast<size_t>(k + kmax)] * ph;
                ph *= step;
            }
            g.at(it, ix, 0) = acc / (2.0 * kPi);
        }
        g.kmax = std::max(g.kmax, kmax);
    }
    return g;
}

KernelGrid heat_kernel_contour(const ClassicalSymbol& p,
                               const std::vector<double>& xs,
                               const std::vector<double>& ys,
                               const std::vector<std::complex<double>>& ts,
                               long K, int nq) {
    KernelGrid g;
    g.x = xs;
    g.y = ys;
    g.t = ts;
    g.route = Route::contour;
    g.allocate();
    g.kmax = K;
    const Eigen::MatrixXcd A = build_matrix(p, K);
    const Eigen::VectorXcd spectrum_v = matrix_spectrum(A);
    std::vector<std::complex<double>> spectrum(spectrum_v.data(),
                                           spectrum_v.data() + spectrum_v.size());
    for (std::size_t it = 0; it < ts.size(); ++it) {
        const ContourSpec c = make_contour(spectrum, ts[it], 1e-2, nq);
        const Eigen::MatrixXcd E = contour_semigroup_matrix(A, c);
        const Eigen::MatrixXcd ker = kernel_from_semigroup(E, xs, ys);
        for (std::size_t ix = 0; ix < xs.size(); ++ix)
            for (std::size_t iy = 0; iy < ys.size(); ++iy)
                g.at(it, ix, iy) = ker(static_cast<Eigen::Index>(ix),
                                       static_cast<Eigen::Index>(iy));
    }
    return g;
}

}  // namespace heatkern
