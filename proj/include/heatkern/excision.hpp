// Low-frequency excision used when homogeneous symbol branches are evaluated
// near xi = 0.
//
// chi is the quintic C^2 step: identically 0 for |xi| <= 1/2, identically 1
// for |xi| >= 1, and u^3(10 - 15u + 6u^2) with u = 2|xi| - 1 in between.
// Every module that needs to cut off a homogeneous singularity uses this one
// function, so the symbolic route and the kernel routes agree bit for bit.

#pragma once

#include <cmath>

namespace heatkern {

inline double excision_chi(double xi) {
    const double a = std::fabs(xi);
    if (a <= 0.5) return 0.0;
    if (a >= 1.0) return 1.0;
    const double u = 2.0 * a - 1.0;
    return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

// d(chi)/d(xi), odd in xi; used by tests that probe smoothness.
inline double excision_chi_prime(double xi) {
    const double a = std::fabs(xi);
    if (a <= 0.5 || a >= 1.0) return 0.0;
    const double u = 2.0 * a - 1.0;
    const double d = 30.0 * u * u * (1.0 + u * (-2.0 + u)) * 2.0;
    return xi >= 0.0 ? d : -d;
}

}  // namespace heatkern
