// Trigonometric polynomials on the circle, stored as sparse maps
// frequency -> complex coefficient, i.e. f(x) = sum_m c_m e^{imx}.
//
// These are the x-dependent coefficients of homogeneous symbol terms, so the
// arithmetic here (convolution products, d/dx, conjugation) has to be exact
// up to floating point: no hidden tolerance pruning.

#pragma once

#include <complex>
#include <map>

namespace heatkern {

class TrigPoly {
  public:
    using Coeff = std::complex<double>;

    TrigPoly() = default;

    static TrigPoly constant(Coeff v);
    // amp * e^{imx}
    static TrigPoly harmonic(int m, Coeff amp);
    // amp * cos(mx), amp * sin(mx) as real combinations of e^{+-imx}
    static TrigPoly cosine(int m, double amp = 1.0);
    static TrigPoly sine(int m, double amp = 1.0);

    Coeff coeff(int m) const;
    void set_coeff(int m, Coeff v);
    const std::map<int, Coeff>& coeffs() const { return c_; }

    Coeff eval(double x) const;

    TrigPoly& operator+=(const TrigPoly& o);
    TrigPoly& operator-=(const TrigPoly& o);
    TrigPoly& operator*=(Coeff s);
    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
    friend TrigPoly operator*(TrigPoly a, Coeff s) { return a *= s; }
    friend TrigPoly operator*(Coeff s, TrigPoly a) { return a *= s; }
    // convolution of coefficient sequences
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);

    TrigPoly diff() const;        // d/dx, multiplies c_m by im
    TrigPoly conjugated() const;  // complex conjugate of the function

    bool is_zero(double tol = 0.0) const;
    bool is_constant(double tol = 0.0) const;
    // f real-valued <=> c_{-m} = conj(c_m) for all m
    bool is_real(double tol = 1e-12) const;

    int bandwidth() const;  // largest |m| with c_m != 0
    double max_abs_coeff() const;

  private:
    void insert(int m, Coeff v);  // drops exact zeros
    std::map<int, Coeff> c_;
};

}  // namespace heatkern
