// Verification campaigns: each one exercises a library route against an
// independent reference (closed forms, identities, bound shapes) and returns
// a pass/fail verdict with the numbers that justify it. The CLI subcommands
// and the acceptance binary both dispatch into these.

#pragma once

#include <string>
#include <vector>

#include "heatkern/classical_symbol.hpp"

namespace heatkern {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// |xi| plus the order-zero coefficient (1/4)(1 + cos x), optionally
// (i/4) sin x on top (the nonselfadjoint variant).
ClassicalSymbol perturbed_dn_symbol(bool with_imag);

CriterionResult criterion_laplace_identity();      // 1
CriterionResult criterion_d1_reduction();          // 2
CriterionResult criterion_route_agreement();       // 3
CriterionResult criterion_two_sided_fractional();  // 4
CriterionResult criterion_dn_bounds();             // 5
CriterionResult criterion_perturbation_bounds();   // 6
CriterionResult criterion_remainder_scaling();     // 7
CriterionResult criterion_parametrix_residual();   // 8
CriterionResult criterion_sector_growth();         // 9
CriterionResult criterion_longtime_decay();        // 10
CriterionResult criterion_theta_identity();        // 11
CriterionResult criterion_semigroup_property();    // 12

// All twelve, in order; failures inside a campaign are caught and reported
// as failed results rather than terminating the run.
std::vector<CriterionResult> run_all_criteria();

}  // namespace heatkern
