// Exception hierarchy shared by the library and the CLI.
//
// The CLI maps these onto process exit codes: config_error -> 2 (invalid
// input), everything else -> 1 (verification / computation failure).

#pragma once

#include <stdexcept>
#include <string>

namespace heatkern {

struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Symbol fails strong ellipticity (Re principal part not bounded below by
// c|xi|^d on the sampling grid) or a multiplier leaves the admissible sector.
struct ellipticity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mode sum or image sum was cut off while the tail estimate still exceeds
// the requested tolerance.
struct truncation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Contour construction or resolvent evaluation failed: no clearance from the
// spectrum, ill-conditioned solve, or time argument too close to +-pi/2.
struct contour_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quadrature did not reach its accuracy target.
struct accuracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace heatkern
