// Homogeneous symbol terms on S^1: h(x, xi) = c+(x) xi^s for xi > 0 and
// c-(x) |xi|^s for xi < 0, with trig-polynomial branch coefficients.
//
// Evaluation conventions:
//  * eval() multiplies branches of degree s != 0 by the shared excision
//    chi(xi), so values are smooth and vanish for |xi| <= 1/2. Degree-0
//    terms are globally smooth already and are returned unmodified.
//  * eval_raw() returns the plain branch value (used for operator matrices
//    on the integer lattice). At xi = 0 it returns 0 for s > 0, the branch
//    average for s = 0, and 0 for s < 0, where the homogeneous extension
//    would be singular and any smooth modification is admissible.

#pragma once

#include <complex>

#include "heatkern/trig_poly.hpp"

namespace heatkern {

class HomogTerm {
  public:
    using Value = std::complex<double>;

    HomogTerm(double degree, TrigPoly both)
        : deg_(degree), cp_(both), cm_(std::move(both)) {}
    HomogTerm(double degree, TrigPoly plus, TrigPoly minus)
        : deg_(degree), cp_(std::move(plus)), cm_(std::move(minus)) {}

    // |xi|^degree
    static HomogTerm abs_xi(double degree);
    // xi itself (odd across xi = 0)
    static HomogTerm signed_xi();
    // the constant 1 (degree 0)
    static HomogTerm unit();

    double degree() const { return deg_; }
    const TrigPoly& branch_plus() const { return cp_; }
    const TrigPoly& branch_minus() const { return cm_; }

    Value eval(double x, double xi) const;
    Value eval_raw(double x, double xi) const;

    HomogTerm d_x() const;
    HomogTerm d_xi() const;  // degree drops by one, minus branch flips sign
    HomogTerm D_xi() const;  // -i d/dxi

    HomogTerm& operator+=(const HomogTerm& o);  // requires equal degree
    HomogTerm operator*(const HomogTerm& o) const;
    HomogTerm scaled(Value s) const;
    HomogTerm mul_trig(const TrigPoly& f) const;

    bool is_zero(double tol = 0.0) const;
    double max_abs_coeff() const;
    bool same_degree(const HomogTerm& o, double tol = 1e-9) const;

  private:
    double deg_;
    TrigPoly cp_, cm_;
};

}  // namespace heatkern
