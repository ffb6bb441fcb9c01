// Fourier multipliers on the integer lattice of S^1 or T^2: operators acting
// as u_k -> p(k) u_k. No excision is involved; the lattice only meets the
// origin at the single point k = 0 and the value there is taken as given.

#pragma once

#include <array>
#include <complex>
#include <functional>
#include <string>

namespace heatkern {

class MultiplierSymbol {
  public:
    using Value = std::complex<double>;
    using Fn1 = std::function<Value(long)>;
    using Fn2 = std::function<Value(long, long)>;

    // even = true asserts p(-k) = p(k), which unlocks a faster cosine-sum
    // path in the kernel assembly.
    static MultiplierSymbol circle(double order, Fn1 f, std::string name = "",
                                   bool even = false);
    static MultiplierSymbol torus(double order, Fn2 f, std::string name = "");

    // |k|^d on S^1 (value 0 at k = 0)
    static MultiplierSymbol fractional(double d);
    // |k| (the flat model of the boundary map taking Dirichlet to Neumann data)
    static MultiplierSymbol dirichlet_to_neumann();
    // (k^2 + 1)^{1/2}
    static MultiplierSymbol bracket();
    // |k|^d + c
    static MultiplierSymbol fractional_shifted(double d, double c);
    // |k|^2 + c
    static MultiplierSymbol laplacian_shifted(double c);
    // |k|^d on T^2 with |k| = sqrt(k1^2 + k2^2)
    static MultiplierSymbol fractional_torus(double d);

    int dim() const { return n_; }
    double order() const { return order_; }
    const std::string& name() const { return name_; }
    bool even() const { return even_; }

    Value value(long k) const;           // n = 1
    Value value(long k1, long k2) const; // n = 2

    // min Re p(k) over |k| <= kmax (spectral lower bound of the truncation)
    double gamma_lower_bound(long kmax) const;
    // min over 1 <= |k| <= kmax of Re p(k) / |k|^order; throws
    // ellipticity_error when <= 0
    double ellipticity_constant(long kmax = 4096) const;
    // max |arg p(k)| over nonzero modes with |k| <= kmax (sector half-angle)
    double sector_angle(long kmax = 4096) const;

  private:
    MultiplierSymbol(int n, double order, Fn1 f1, Fn2 f2, std::string name,
                     bool even)
        : n_(n), order_(order), f1_(std::move(f1)), f2_(std::move(f2)),
          name_(std::move(name)), even_(even) {}

    int n_;
    double order_;
    Fn1 f1_;
    Fn2 f2_;
    std::string name_;
    bool even_;
};

}  // namespace heatkern
