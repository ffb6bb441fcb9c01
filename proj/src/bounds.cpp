#include "heatkern/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "heatkern/errors.hpp"
#include "heatkern/multiplier.hpp"
#include "heatkern/spectral.hpp"

namespace heatkern {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

double circle_distance(double x, double y) {
    const double r = std::abs(std::remainder(x - y, kTwoPi));
    return r;  // remainder lands in [-pi, pi], so |r| is the geodesic distance
}

double poisson_bound(double dist, double t, double d, double n) {
    if (!(dist >= 0.0) || !(t > 0.0))
        throw config_error("poisson_bound: need dist >= 0, t > 0");
    const double D = dist + std::pow(t, 1.0 / d);
    return t * std::pow(D, -n - d);
}

double refined_bound(double dist, double t, double d, double n, double gamma) {
    if (!(dist >= 0.0) || !(t > 0.0) || !(gamma >= 0.0))
        throw config_error("refined_bound: need dist >= 0, t > 0, gamma >= 0");
    const double D = dist + std::pow(t, 1.0 / d);
    return std::exp(-gamma * t) * t * std::pow(D, -d) *
           (std::pow(D, -n) + 1.0);
}

double bound_exponent_N(double d, double n) {
    return std::max(n / d, 3.5 * n + 4.0 * d + 7.0);
}

double complex_bound(double dist, double tmod, double theta, double d,
                     double n, double gamma) {
    if (!(std::abs(theta) < kPi / 2.0))
        throw config_error("complex_bound: need |theta| < pi/2");
    if (!(dist >= 0.0) || !(tmod > 0.0))
        throw config_error("complex_bound: need dist >= 0, tmod > 0");
    const double N = bound_exponent_N(d, n);
    const double D = dist + std::pow(tmod, 1.0 / d);
    return std::pow(std::cos(theta), -N) *
           std::exp(-gamma * tmod * std::cos(theta)) * tmod *
           std::pow(D, -d) * (std::pow(D, -n) + 1.0);
}

double perturb_upper_bound(double dist, double t, double d, double n,
                           double c1) {
    if (!(dist >= 0.0) || !(t > 0.0))
        throw config_error("perturb_upper_bound: need dist >= 0, t > 0");
    const double D = dist + std::pow(t, 1.0 / d);
    return t * (std::pow(D, -n - d) + std::pow(D, -d)) +
           std::exp(-c1 * t) * t * std::pow(D, 1.0 - n - d);
}

std::vector<double> log_spaced(double lo, double hi, int count) {
    if (!(lo > 0.0) || !(hi > lo) || count < 2)
        throw config_error("log_spaced: need 0 < lo < hi and count >= 2");
    std::vector<double> v(count);
    const double la = std::log(lo), lb = std::log(hi);
    for (int i = 0; i < count; ++i)
        v[i] = std::exp(la + (lb - la) * i / (count - 1));
    v.front() = lo;
    v.back() = hi;
    return v;
}

std::vector<double> standard_offsets(int per_decade) {
    if (per_decade < 1) throw config_error("standard_offsets: per_decade >= 1");
    const double lo = 1e-3, hi = kPi;
    const int count =
        1 + static_cast<int>(std::ceil(per_decade * std::log10(hi / lo)));
    std::vector<double> v{0.0};
    const auto body = log_spaced(lo, hi, count);
    v.insert(v.end(), body.begin(), body.end());
    return v;
}

std::vector<double> standard_times(double tmin, double tmax, int per_decade) {
    if (per_decade < 1) throw config_error("standard_times: per_decade >= 1");
    const int count =
        1 + static_cast<int>(std::ceil(per_decade * std::log10(tmax / tmin)));
    return log_spaced(tmin, tmax, count);
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw config_error("fit_line: need two or more matched points");
    const double m = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double det = m * sxx - sx * sx;
    if (det == 0.0) throw config_error("fit_line: degenerate abscissae");
    LineFit f;
    f.slope = (m * sxy - sx * sy) / det;
    f.intercept = (sy - f.slope * sx) / m;
    for (std::size_t i = 0; i < x.size(); ++i)
        f.max_resid = std::max(
            f.max_resid, std::abs(y[i] - f.slope * x[i] - f.intercept));
    return f;
}

LineFit fit_loglog_last_decade(const std::vector<double>& t,
                               const std::vector<double>& v) {
    if (t.size() != v.size() || t.empty())
        throw config_error("fit: matched nonempty samples required");
    const double tmax = *std::max_element(t.begin(), t.end());
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] >= tmax / 10.0 && t[i] > 0.0 && v[i] > 0.0) {
            lx.push_back(std::log(t[i]));
            ly.push_back(std::log(v[i]));
        }
    }
    if (lx.size() < 2)
        throw accuracy_error("fit: fewer than two usable samples "
                             "in the last decade");
    return fit_line(lx, ly);
}

namespace {

// Shared ratio accumulation over a kernel grid.
void scan_into(const KernelGrid& grid, const BoundFn& bound, double /*d*/,
               const RegionFilter& region, BoundReport& rep) {
    for (std::size_t it = 0; it < grid.t.size(); ++it) {
        if (!grid.identity_slice.empty() && grid.identity_slice[it]) continue;
        if (grid.t[it].imag() != 0.0)
            throw config_error("ratio_scan: real times only");
        const double t = grid.t[it].real();
        if (!(t > 0.0)) continue;
        for (std::size_t ix = 0; ix < grid.x.size(); ++ix) {
            for (std::size_t iy = 0; iy < grid.y.size(); ++iy) {
                const double dist = circle_distance(grid.x[ix], grid.y[iy]);
                if (region && !region(dist, t)) continue;
                const double B = bound(dist, t);
                if (!(B > 0.0)) {
                    ++rep.excluded_zero_bound;
                    continue;
                }
                const double ratio = std::abs(grid.at(it, ix, iy)) / B;
                rep.sup_ratio = std::max(rep.sup_ratio, ratio);
                rep.inf_ratio = std::min(rep.inf_ratio, ratio);
                ++rep.samples;
            }
        }
    }
    if (rep.samples == 0) {
        rep.empty_region = true;
        rep.inf_ratio = 0.0;
    }
}

std::string grid_descr(const KernelGrid& grid) {
    std::ostringstream os;
    os << grid.x.size() << "x" << grid.y.size() << " offsets, "
       << grid.t.size() << " times, route " << route_name(grid.route);
    return os.str();
}

}  // namespace

BoundReport ratio_scan(const KernelGrid& grid, const BoundFn& bound, double d,
                       double n, const RegionFilter& region,
                       const std::string& name) {
    BoundReport rep;
    rep.name = name;
    rep.d = d;
    rep.n = n;
    rep.grid_desc = grid_descr(grid);
    scan_into(grid, bound, d, region, rep);
    rep.pass = !rep.empty_region && std::isfinite(rep.sup_ratio) &&
               rep.inf_ratio >= 0.0;
    return rep;
}

std::vector<BoundReport> ratio_scan_stratified(const KernelGrid& grid,
                                               const BoundFn& bound, double d,
                                               double n,
                                               const std::string& name) {
    std::vector<BoundReport> out;
    const auto near = [d](double dist, double t) {
        return dist < std::pow(t, 1.0 / d);
    };
    const auto far = [d](double dist, double t) {
        return dist >= std::pow(t, 1.0 / d);
    };
    out.push_back(ratio_scan(grid, bound, d, n, near, name + "/near"));
    out.push_back(ratio_scan(grid, bound, d, n, far, name + "/far"));
    return out;
}

BoundReport lower_bound_scan(const KernelGrid& grid, double d, double n,
                             double r, const std::string& name,
                             bool use_abs) {
    BoundReport rep;
    rep.name = name;
    rep.d = d;
    rep.n = n;
    rep.grid_desc = grid_descr(grid);
    for (std::size_t it = 0; it < grid.t.size(); ++it) {
        if (!grid.identity_slice.empty() && grid.identity_slice[it]) continue;
        const double t = grid.t[it].real();
        if (!(t > 0.0)) continue;
        for (std::size_t ix = 0; ix < grid.x.size(); ++ix) {
            for (std::size_t iy = 0; iy < grid.y.size(); ++iy) {
                const double dist = circle_distance(grid.x[ix], grid.y[iy]);
                if (dist + std::pow(t, 1.0 / d) > r) continue;
                const double B = poisson_bound(dist, t, d, n);
                if (!(B > 0.0)) {
                    ++rep.excluded_zero_bound;
                    continue;
                }
                const auto K = grid.at(it, ix, iy);
                const double ratio = (use_abs ? std::abs(K) : K.real()) / B;
                rep.sup_ratio = std::max(rep.sup_ratio, ratio);
                rep.inf_ratio = std::min(rep.inf_ratio, ratio);
                ++rep.samples;
            }
        }
    }
    if (rep.samples == 0) {
        rep.empty_region = true;
        rep.inf_ratio = 0.0;
    }
    rep.pass = !rep.empty_region && rep.inf_ratio > 0.0;
    return rep;
}

BoundReport angle_exponent_fit(const MultiplierSymbol& p, double tmod,
                               const std::vector<double>& thetas, double d,
                               double n) {
    if (thetas.empty()) throw config_error("angle fit: empty angle list");
    BoundReport rep;
    rep.name = "angle_exponent_fit";
    rep.d = d;
    rep.n = n;
    const double ell = p.ellipticity_constant();
    std::vector<double> xs, ys;  // (-log cos theta, log S)
    std::ostringstream notes;
    for (double th : thetas) {
        if (!(std::abs(th) < kPi / 2.0))
            throw config_error("angle fit: |theta| < pi/2 required");
        const std::complex<double> t = std::polar(tmod, th);
        try {
            const long kmax =
                default_kmax(ell, p.order(), t.real(), 1e-12);
            const auto row =
                multiplier_kernel_row(p, {0.0}, t, kmax);
            // multipliers have x-independent diagonal, so one offset is the sup
            const double S = std::abs(row[0]);
            if (!(S > 0.0)) {
                ++rep.dropped;
                notes << " dropped theta=" << th << " (vanishing sum);";
                continue;
            }
            xs.push_back(-std::log(std::cos(th)));
            ys.push_back(std::log(S));
            ++rep.samples;
        } catch (const truncation_error&) {
            ++rep.dropped;
            notes << " dropped theta=" << th << " (mode sum truncation);";
        }
    }
    if (xs.size() < 2)
        throw accuracy_error("angle fit: fewer than two usable angles");
    const LineFit f = fit_line(xs, ys);
    rep.fit_slope = f.slope;
    rep.fit_intercept = f.intercept;
    rep.fit_max_resid = f.max_resid;
    rep.sup_ratio = std::exp(*std::max_element(ys.begin(), ys.end()));
    rep.inf_ratio = std::exp(*std::min_element(ys.begin(), ys.end()));
    rep.grid_desc = "diagonal, tmod fixed, angles toward pi/2";
    rep.pass = f.slope <= bound_exponent_N(d, n) + 0.2;
    rep.detail = notes.str();
    return rep;
}

BoundReport longtime_check(const MultiplierSymbol& p, double gamma) {
    const auto offsets = standard_offsets();
    const auto times = standard_times(1.0, 20.0, 20);
    std::vector<std::complex<double>> ts(times.begin(), times.end());
    const KernelGrid grid = heat_kernel_spectral(p, offsets, ts);
    BoundReport rep =
        ratio_scan(grid,
                   [gamma](double dist, double t) {
                       return refined_bound(dist, t, 1.0, 1.0, gamma);
                   },
                   p.order(), 1.0, [](double, double) { return true; },
                   "longtime_check");
    rep.pass = rep.pass && std::isfinite(rep.sup_ratio);
    return rep;
}

BoundReport derivative_bound_scan(const MultiplierSymbol& p, int j, int g,
                                  double d, double n) {
    const auto offsets = standard_offsets();
    const auto times = standard_times(1e-2, 1.0, 20);
    const double ell = p.ellipticity_constant();
    BoundReport rep;
    rep.name = "derivative_bound_scan";
    rep.d = d;
    rep.n = n;
    rep.grid_desc = "standard offsets, t in [1e-2, 1]";
    for (double t : times) {
        const long kmax = derivative_kmax(ell, p.order(), t, j, g);
        const auto row = multiplier_derivative_row(p, offsets, t, j, g, kmax);
        for (std::size_t i = 0; i < offsets.size(); ++i) {
            const double dist = circle_distance(offsets[i], 0.0);
            const double B =
                t * std::pow(dist + std::pow(t, 1.0 / d),
                             -(1.0 + j) * d - g - n);
            if (!(B > 0.0)) {
                ++rep.excluded_zero_bound;
                continue;
            }
            const double ratio = std::abs(row[i]) / B;
            rep.sup_ratio = std::max(rep.sup_ratio, ratio);
            rep.inf_ratio = std::min(rep.inf_ratio, ratio);
            ++rep.samples;
        }
    }
    rep.pass = rep.samples > 0 && std::isfinite(rep.sup_ratio);
    return rep;
}

}  // namespace heatkern
