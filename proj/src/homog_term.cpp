#include "heatkern/homog_term.hpp"

#include <cmath>
#include <stdexcept>

#include "heatkern/errors.hpp"
#include "heatkern/excision.hpp"

namespace heatkern {

HomogTerm HomogTerm::abs_xi(double degree) {
    return HomogTerm(degree, TrigPoly::constant(1.0));
}

HomogTerm HomogTerm::signed_xi() {
    return HomogTerm(1.0, TrigPoly::constant(1.0), TrigPoly::constant(-1.0));
}

HomogTerm HomogTerm::unit() {
    return HomogTerm(0.0, TrigPoly::constant(1.0));
}

HomogTerm::Value HomogTerm::eval_raw(double x, double xi) const {
    if (xi > 0.0) return cp_.eval(x) * std::pow(xi, deg_);
    if (xi < 0.0) return cm_.eval(x) * std::pow(-xi, deg_);
    if (deg_ == 0.0) return 0.5 * (cp_.eval(x) + cm_.eval(x));
    return Value(0.0, 0.0);
}

HomogTerm::Value HomogTerm::eval(double x, double xi) const {
    if (deg_ == 0.0) return eval_raw(x, xi);
    const double chi = excision_chi(xi);
    if (chi == 0.0) return Value(0.0, 0.0);
    return chi * eval_raw(x, xi);
}

HomogTerm HomogTerm::d_x() const {
    return HomogTerm(deg_, cp_.diff(), cm_.diff());
}

HomogTerm HomogTerm::d_xi() const {
    // d/dxi [c(x) |xi|^s] = s c(x) |xi|^{s-1} * sign(xi)
    return HomogTerm(deg_ - 1.0, cp_ * Value(deg_, 0.0),
                     cm_ * Value(-deg_, 0.0));
}

HomogTerm HomogTerm::D_xi() const {
    HomogTerm d = d_xi();
    return d.scaled(Value(0.0, -1.0));
}

HomogTerm& HomogTerm::operator+=(const HomogTerm& o) {
    if (!same_degree(o))
        throw config_error("HomogTerm: cannot add terms of different degree");
    cp_ += o.cp_;
    cm_ += o.cm_;
    return *this;
}

HomogTerm HomogTerm::operator*(const HomogTerm& o) const {
    return HomogTerm(deg_ + o.deg_, cp_ * o.cp_, cm_ * o.cm_);
}

HomogTerm HomogTerm::scaled(Value s) const {
    return HomogTerm(deg_, cp_ * s, cm_ * s);
}

HomogTerm HomogTerm::mul_trig(const TrigPoly& f) const {
    return HomogTerm(deg_, cp_ * f, cm_ * f);
}

bool HomogTerm::is_zero(double tol) const {
    return cp_.is_zero(tol) && cm_.is_zero(tol);
}

double HomogTerm::max_abs_coeff() const {
    return std::max(cp_.max_abs_coeff(), cm_.max_abs_coeff());
}

bool HomogTerm::same_degree(const HomogTerm& o, double tol) const {
    return std::fabs(deg_ - o.deg_) <= tol;
}

}  // namespace heatkern
