// Acceptance gate: every release criterion, one verdict line each.
// Exit status is the number of failing criteria.

#include <cstdio>

#include "heatkern/campaigns.hpp"

int main() {
    const auto results = heatkern::run_all_criteria();
    int failures = 0;
    for (const auto& r : results) {
        std::printf("[%s] criterion %2d: %s - %s\n", r.pass ? "PASS" : "FAIL",
                    r.index, r.name.c_str(), r.detail.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failures;
    }
    std::printf("%d of %zu criteria failed\n", failures, results.size());
    return failures;
}
