// Subcommand dispatch for the CLI binary.

#pragma once

#include <string>

#include "heatkern/config.hpp"

namespace heatkern {

// kernel | verify | parametrix | subordinator | bounds | scan-angle.
// Returns the process exit code: 0 success/pass, 1 verification failure.
// Invalid input raises config_error (mapped to 2 by the caller).
int run_subcommand(const std::string& name, const RunConfig& cfg);

}  // namespace heatkern
