#include "heatkern/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "heatkern/errors.hpp"

namespace heatkern {

namespace {

GaussRule compute_gauss(int n) {
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Legendre three-term recurrence for P_n(x) and P'_n(x).
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.w[i] = w;
        r.w[n - 1 - i] = w;
    }
    if (n % 2 == 1) r.x[n / 2] = 0.0;
    return r;
}

// Kronrod 15 / Gauss 7 pair (nodes of the 15-point rule on [0,1] side).
const double kGK15X[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
const double kGK15W[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
const double kG7W[4] = {0.129484966168870, 0.279705391489277,
                        0.381830050505119, 0.417959183673469};

struct PanelResult {
    double kronrod;
    double err;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kGK15X[i]);
        fv[14 - i] = f(c + h * kGK15X[i]);
    }
    fv[7] = f(c);
    double resk = kGK15W[7] * fv[7];
    double resg = kG7W[3] * fv[7];
    for (int i = 0; i < 7; ++i) resk += kGK15W[i] * (fv[i] + fv[14 - i]);
    for (int i = 0; i < 3; ++i) {
        int j = 2 * i + 1;  // Kronrod nodes 1,3,5 are the embedded Gauss nodes
        resg += kG7W[i] * (fv[j] + fv[14 - j]);
    }
    return {resk * h, std::fabs((resk - resg) * h)};
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double abs_tol, double rel_tol, int depth, int max_depth) {
    PanelResult p = gk15(f, a, b);
    if (p.err <= abs_tol || p.err <= rel_tol * std::fabs(p.kronrod))
        return p.kronrod;
    if (depth >= max_depth)
        throw accuracy_error("adaptive quadrature: subdivision limit reached");
    const double m = 0.5 * (a + b);
    return adapt(f, a, m, 0.5 * abs_tol, rel_tol, depth + 1, max_depth) +
           adapt(f, m, b, 0.5 * abs_tol, rel_tol, depth + 1, max_depth);
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw config_error("gauss_legendre: order must be >= 1");
    static std::map<int, GaussRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss(n)).first;
    return it->second;
}

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, double rel_tol,
                          int max_depth) {
    if (!(b > a)) return 0.0;
    return adapt(f, a, b, abs_tol, rel_tol, 0, max_depth);
}

}  // namespace heatkern
