// Classical (polyhomogeneous) symbols on S^1: finite sums of homogeneous
// terms of degrees d, d-1, d-2, ... with trig-polynomial coefficients.

#pragma once

#include <complex>
#include <vector>

#include "heatkern/homog_term.hpp"

namespace heatkern {

class ClassicalSymbol {
  public:
    // Terms may arrive in any order; degrees must sit on the ladder
    // order - l for integer l >= 0 (gaps are fine) and the leading degree
    // must equal `order`.
    ClassicalSymbol(double order, std::vector<HomogTerm> terms);

    double order() const { return order_; }
    const std::vector<HomogTerm>& terms() const { return terms_; }
    const HomogTerm& principal() const { return terms_.front(); }
    // nullptr when the ladder level is absent
    const HomogTerm* term_at_degree(double degree) const;

    std::complex<double> eval(double x, double xi) const;      // excised
    std::complex<double> eval_raw(double x, double xi) const;  // lattice form

    // True when every coefficient is constant in x.
    bool is_multiplier(double tol = 0.0) const;

    // min over x-grid and both signs of Re p0(x, +-1); throws
    // ellipticity_error when the minimum is <= 0. Homogeneity reduces the
    // check to |xi| = 1.
    double ellipticity_constant(int nx = 128) const;

    // Opening half-angle of the smallest sector around R+ containing the
    // principal values: max |arg p0(x, +-1)|. Requires Re p0 > 0.
    double sector_angle(int nx = 128) const;

  private:
    double order_;
    std::vector<HomogTerm> terms_;  // sorted by decreasing degree
};

}  // namespace heatkern
