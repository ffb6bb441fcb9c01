// Run configuration: strict JSON (unknown keys rejected), complex times given
// as [modulus, angle] pairs.

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "heatkern/classical_symbol.hpp"
#include "heatkern/multiplier.hpp"

namespace heatkern {

struct SymbolSpec {
    // fractional | fractional_shifted | bracket | dn | laplacian_shifted |
    // perturbed_dn
    std::string kind = "dn";
    double d = 1.0;
    double shift = 0.0;
    bool imag = false;  // perturbed_dn: add the (i/4) sin x part
};

struct GridSpec {
    // offsets: standard log-spaced set unless an explicit list is given
    bool standard_offsets_flag = true;
    int offsets_per_decade = 8;
    std::vector<double> offsets;
    // times: log-spaced real unless an explicit [modulus, angle] list is given
    bool log_times = true;
    double tmin = 1e-2;
    double tmax = 10.0;
    int t_per_decade = 20;
    std::vector<std::complex<double>> times;
};

struct BoundSpec {
    std::string name = "refined";  // poisson | refined | perturb
    double gamma = 0.0;
    double c1 = 0.0;
    // deliberate distortion knob for harness self-tests: added to the
    // distance exponent
    double exponent_offset = 0.0;
    double region_r = 1.0;     // lower-bound region dist + t^{1/d} <= r
    double spread_cap = 1e3;   // sup/inf sanity cap for upper-bound scans
};

struct RunConfig {
    int campaign = 0;  // > 0 selects one acceptance campaign
    SymbolSpec symbol;
    std::string route = "spectral";
    GridSpec grid;
    double tol = 1e-10;
    long kmax = 0;
    int nq = 200;
    int threads = 1;
    int terms = 2;  // expansion length L (and remainder depth M)
    long K = 128;   // operator matrix truncation
    std::vector<std::complex<double>> lambdas;
    std::string remainder_exact;  // multiplier kind with exact kernel, or ""
    BoundSpec bound;
    bool lower = false;  // bounds subcommand: lower-bound mode
    std::vector<double> tmods{1.0};
    int angle_levels = 8;
    std::vector<double> dlist{1.0};
    std::vector<double> svalues;
    std::string out;
    std::string contour_dump;
};

RunConfig load_config(const std::string& path);

MultiplierSymbol make_multiplier(const SymbolSpec& s);
ClassicalSymbol make_classical(const SymbolSpec& s);

std::vector<double> offsets_from(const GridSpec& g);
std::vector<std::complex<double>> times_from(const GridSpec& g);

}  // namespace heatkern
