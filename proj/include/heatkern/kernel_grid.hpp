// Kernel samples over coordinate/time grids, with provenance metadata.

#pragma once

#include <complex>
#include <string>
#include <vector>

namespace heatkern {

enum class Route { spectral, contour, subordination, closed_form };

const char* route_name(Route r);

struct KernelGrid {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<std::complex<double>> t;
    // layout: values[(it * x.size() + ix) * y.size() + iy]
    std::vector<std::complex<double>> values;
    Route route = Route::spectral;
    long kmax = 0;
    double tail_bound = 0.0;
    // slices with t = 0 carry the identity, not a function kernel; values
    // stay zero there and the flag marks them
    std::vector<bool> identity_slice;

    std::complex<double>& at(std::size_t it, std::size_t ix, std::size_t iy) {
        return values[(it * x.size() + ix) * y.size() + iy];
    }
    const std::complex<double>& at(std::size_t it, std::size_t ix,
                                   std::size_t iy) const {
        return values[(it * x.size() + ix) * y.size() + iy];
    }
    void allocate() {
        values.assign(t.size() * x.size() * y.size(), {});
        identity_slice.assign(t.size(), false);
    }
};

}  // namespace heatkern
