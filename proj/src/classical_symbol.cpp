#include "heatkern/classical_symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "heatkern/errors.hpp"

namespace heatkern {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kDegTol = 1e-9;
}  // namespace

ClassicalSymbol::ClassicalSymbol(double order, std::vector<HomogTerm> terms)
    : order_(order), terms_(std::move(terms)) {
    if (terms_.empty())
        throw config_error("ClassicalSymbol: needs at least the principal term");
    std::sort(terms_.begin(), terms_.end(),
              [](const HomogTerm& a, const HomogTerm& b) {
                  return a.degree() > b.degree();
              });
    if (std::fabs(terms_.front().degree() - order_) > kDegTol)
        throw config_error("ClassicalSymbol: leading degree must equal order");
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const double l = order_ - terms_[i].degree();
        if (l < -kDegTol || std::fabs(l - std::round(l)) > kDegTol)
            throw config_error(
                "ClassicalSymbol: term degrees must be order - l, l integer");
        if (i > 0 && terms_[i].same_degree(terms_[i - 1]))
            throw config_error("ClassicalSymbol: duplicate ladder level");
    }
}

const HomogTerm* ClassicalSymbol::term_at_degree(double degree) const {
    for (const auto& t : terms_)
        if (std::fabs(t.degree() - degree) <= kDegTol) return &t;
    return nullptr;
}

std::complex<double> ClassicalSymbol::eval(double x, double xi) const {
    std::complex<double> s(0.0, 0.0);
    for (const auto& t : terms_) s += t.eval(x, xi);
    return s;
}

std::complex<double> ClassicalSymbol::eval_raw(double x, double xi) const {
    std::complex<double> s(0.0, 0.0);
    for (const auto& t : terms_) s += t.eval_raw(x, xi);
    return s;
}

bool ClassicalSymbol::is_multiplier(double tol) const {
    for (const auto& t : terms_)
        if (!t.branch_plus().is_constant(tol) ||
            !t.branch_minus().is_constant(tol))
            return false;
    return true;
}

double ClassicalSymbol::ellipticity_constant(int nx) const {
    double c = std::numeric_limits<double>::infinity();
    for (int i = 0; i < nx; ++i) {
        const double x = 2.0 * kPi * i / nx;
        for (double xi : {1.0, -1.0})
            c = std::min(c, principal().eval_raw(x, xi).real());
    }
    if (!(c > 0.0))
        throw ellipticity_error(
            "principal symbol is not strongly elliptic on the sample grid");
    return c;
}

double ClassicalSymbol::sector_angle(int nx) const {
    ellipticity_constant(nx);
    double a = 0.0;
    for (int i = 0; i < nx; ++i) {
        const double x = 2.0 * kPi * i / nx;
        for (double xi : {1.0, -1.0})
            a = std::max(a, std::fabs(std::arg(principal().eval_raw(x, xi))));
    }
    return a;
}

}  // namespace heatkern
