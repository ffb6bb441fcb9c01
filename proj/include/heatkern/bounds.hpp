// Poissonian bound functions and the verification scans that compare computed
// kernels against them. The theory only fixes bound shapes up to constants,
// so scans report empirical ratio windows [inf, sup] and check finiteness,
// positivity, and stability of the window under grid refinement.

#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "heatkern/kernel_grid.hpp"

namespace heatkern {

// Geodesic distance on S^1: min(|x-y| mod 2pi, 2pi - |x-y| mod 2pi).
double circle_distance(double x, double y);

// t (dist + t^{1/d})^{-n-d}
double poisson_bound(double dist, double t, double d, double n);

// e^{-gamma t} t (dist + t^{1/d})^{-d} ((dist + t^{1/d})^{-n} + 1)
double refined_bound(double dist, double t, double d, double n, double gamma);

// Growth exponent for complex time: max{n/d, 7n/2 + 4d + 7}.
double bound_exponent_N(double d, double n);

// (cos theta)^{-N} e^{-gamma tmod cos theta} tmod (dist + tmod^{1/d})^{-d}
//   ((dist + tmod^{1/d})^{-n} + 1);  |theta| < pi/2 required.
double complex_bound(double dist, double tmod, double theta, double d,
                     double n, double gamma);

// Upper bound shape for an operator sharing its top symbol with a fractional
// power: t ((D)^{-n-d} + (D)^{-d}) + e^{-c1 t} t (D)^{1-n-d}, D = dist+t^{1/d}.
double perturb_upper_bound(double dist, double t, double d, double n,
                           double c1);

// Standard verification grid. Offsets: {0} together with a log-spaced set
// from 1e-3 to pi (endpoints included); times: log-spaced with the given
// density per decade, endpoints included.
std::vector<double> standard_offsets(int per_decade = 8);
std::vector<double> standard_times(double tmin = 1e-2, double tmax = 10.0,
                                   int per_decade = 20);
std::vector<double> log_spaced(double lo, double hi, int count);

struct BoundReport {
    std::string name;
    double d = 1.0;
    double n = 1.0;
    std::string grid_desc;
    double sup_ratio = 0.0;
    double inf_ratio = std::numeric_limits<double>::infinity();
    std::size_t samples = 0;
    std::size_t excluded_zero_bound = 0;
    std::size_t dropped = 0;  // samples dropped for evaluation failures
    double fit_slope = std::numeric_limits<double>::quiet_NaN();
    double fit_intercept = std::numeric_limits<double>::quiet_NaN();
    double fit_max_resid = std::numeric_limits<double>::quiet_NaN();
    bool empty_region = false;
    bool pass = false;
    std::string detail;
};

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_resid = 0.0;
};

// Least-squares line through (x_i, y_i); needs at least two points.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Log-log slope fit restricted to the last decade of abscissae.
LineFit fit_loglog_last_decade(const std::vector<double>& t,
                               const std::vector<double>& v);

// dist/t selector for scan regions; true keeps the sample.
using RegionFilter = std::function<bool(double dist, double t)>;

// Bound evaluated at (dist, t).
using BoundFn = std::function<double(double dist, double t)>;

// Ratio |K|/B over a kernel grid (grid.x are offsets from 0, grid.y = {0},
// real times). Samples where the bound vanishes are excluded and counted.
// Identity slices (t = 0) are skipped. Both strata dist < t^{1/d} and
// dist >= t^{1/d} must be populated for the two-regime split to be reported.
BoundReport ratio_scan(const KernelGrid& grid, const BoundFn& bound,
                       double d, double n, const RegionFilter& region,
                       const std::string& name);

// Two-regime version: returns reports for dist < t^{1/d} and dist >= t^{1/d}.
std::vector<BoundReport> ratio_scan_stratified(const KernelGrid& grid,
                                               const BoundFn& bound, double d,
                                               double n,
                                               const std::string& name);

// inf of K / poisson_bound over dist + t^{1/d} <= r; pass iff positive.
// use_abs compares |K| (operators without a sign guarantee); otherwise the
// real part is compared, which is the honest check for kernels claimed
// nonnegative.
BoundReport lower_bound_scan(const KernelGrid& grid, double d, double n,
                             double r, const std::string& name,
                             bool use_abs = false);

class MultiplierSymbol;

// Diagonal sector growth: S(theta) = sup_x |K(x,x,tmod e^{i theta})| for each
// listed angle, least-squares slope of log S against -log cos(theta).
// Samples whose mode sums cannot reach tolerance are dropped and counted.
// Passes iff the slope is at most bound_exponent_N(d,n) + 0.2.
BoundReport angle_exponent_fit(const MultiplierSymbol& p, double tmod,
                               const std::vector<double>& thetas, double d,
                               double n);

// sup_{x,y} |K| e^{gamma t} against the non-exponential refined-bound factor
// over t in [1, 20]; pass iff the ratio stays bounded over the scan.
BoundReport longtime_check(const MultiplierSymbol& p, double gamma);

// |d_t^j d_x^g K| against t (dist + t^{1/d})^{-(1+j)d - g - n} over the
// standard offsets and t in [1e-2, 1]; upper bound only.
BoundReport derivative_bound_scan(const MultiplierSymbol& p, int j, int g,
                                  double d, double n);

}  // namespace heatkern
