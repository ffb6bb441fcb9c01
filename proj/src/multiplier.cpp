#include "heatkern/multiplier.hpp"

#include <cmath>
#include <limits>

#include "heatkern/errors.hpp"

namespace heatkern {

MultiplierSymbol MultiplierSymbol::circle(double order, Fn1 f,
                                          std::string name, bool even) {
    return MultiplierSymbol(1, order, std::move(f), nullptr, std::move(name),
                            even);
}

MultiplierSymbol MultiplierSymbol::torus(double order, Fn2 f,
                                         std::string name) {
    return MultiplierSymbol(2, order, nullptr, std::move(f), std::move(name),
                            false);
}

MultiplierSymbol MultiplierSymbol::fractional(double d) {
    return circle(d, [d](long k) {
        return Value(std::pow(std::labs(k), d), 0.0);
    }, "fractional", true);
}

MultiplierSymbol MultiplierSymbol::dirichlet_to_neumann() {
    return circle(1.0, [](long k) {
        return Value(static_cast<double>(std::labs(k)), 0.0);
    }, "dirichlet_to_neumann", true);
}

MultiplierSymbol MultiplierSymbol::bracket() {
    return circle(1.0, [](long k) {
        return Value(std::sqrt(static_cast<double>(k) * k + 1.0), 0.0);
    }, "bracket", true);
}

MultiplierSymbol MultiplierSymbol::fractional_shifted(double d, double c) {
    return circle(d, [d, c](long k) {
        return Value(std::pow(std::labs(k), d) + c, 0.0);
    }, "fractional_shifted", true);
}

MultiplierSymbol MultiplierSymbol::laplacian_shifted(double c) {
    return circle(2.0, [c](long k) {
        return Value(static_cast<double>(k) * k + c, 0.0);
    }, "laplacian_shifted", true);
}

MultiplierSymbol MultiplierSymbol::fractional_torus(double d) {
    return torus(d, [d](long k1, long k2) {
        const double r2 = static_cast<double>(k1) * k1 +
                          static_cast<double>(k2) * k2;
        return Value(std::pow(r2, 0.5 * d), 0.0);
    }, "fractional_torus");
}

MultiplierSymbol::Value MultiplierSymbol::value(long k) const {
    if (n_ != 1) throw config_error("MultiplierSymbol: wrong dimension");
    return f1_(k);
}

MultiplierSymbol::Value MultiplierSymbol::value(long k1, long k2) const {
    if (n_ != 2) throw config_error("MultiplierSymbol: wrong dimension");
    return f2_(k1, k2);
}

double MultiplierSymbol::gamma_lower_bound(long kmax) const {
    double g = std::numeric_limits<double>::infinity();
    if (n_ == 1) {
        for (long k = -kmax; k <= kmax; ++k) g = std::min(g, f1_(k).real());
    } else {
        for (long k1 = -kmax; k1 <= kmax; ++k1)
            for (long k2 = -kmax; k2 <= kmax; ++k2)
                g = std::min(g, f2_(k1, k2).real());
    }
    return g;
}

double MultiplierSymbol::ellipticity_constant(long kmax) const {
    double c = std::numeric_limits<double>::infinity();
    if (n_ == 1) {
        for (long k = -kmax; k <= kmax; ++k) {
            if (k == 0) continue;
            c = std::min(c, f1_(k).real() /
                                std::pow(std::labs(k), order_));
        }
    } else {
        for (long k1 = -kmax; k1 <= kmax; ++k1) {
            for (long k2 = -kmax; k2 <= kmax; ++k2) {
                if (k1 == 0 && k2 == 0) continue;
                const double r = std::hypot((double)k1, (double)k2);
                c = std::min(c, f2_(k1, k2).real() / std::pow(r, order_));
            }
        }
    }
    if (!(c > 0.0))
        throw ellipticity_error("multiplier is not elliptic on the lattice");
    return c;
}

double MultiplierSymbol::sector_angle(long kmax) const {
    ellipticity_constant(kmax);
    double a = 0.0;
    auto upd = [&a](Value v) { a = std::max(a, std::fabs(std::arg(v))); };
    if (n_ == 1) {
        for (long k = -kmax; k <= kmax; ++k)
            if (k != 0) upd(f1_(k));
    } else {
        for (long k1 = -kmax; k1 <= kmax; ++k1)
            for (long k2 = -kmax; k2 <= kmax; ++k2)
                if (k1 != 0 || k2 != 0) upd(f2_(k1, k2));
    }
    return a;
}

}  // namespace heatkern
