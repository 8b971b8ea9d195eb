#pragma once

// The ten acceptance criteria.  Shared by the acceptance test binary and
// `glsmx verify`.

#include <string>
#include <vector>

namespace glsmx::acceptance {

struct CheckResult {
    std::string name;
    std::string status;         // "pass", "fail" or "skipped"
    std::string first_failure;  // empty on pass
    double seconds = 0;
};

CheckResult stilde_closed_forms();
CheckResult irrational_factor();
CheckResult eps_series_positivity();
CheckResult dual_path_unstable_terms();
CheckResult leading_normalization();
CheckResult graph_sum_oracles();
CheckResult enumeration_oracle();
CheckResult contraction_algebra();
CheckResult partial_order();
CheckResult delta_rule();

std::vector<CheckResult> run_all();

}  // namespace glsmx::acceptance
