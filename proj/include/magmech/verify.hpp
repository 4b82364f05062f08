#pragma once

#include <string>
#include <vector>

namespace magmech {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    bool quick = false;        // run only the fast subset {1, 2, 7, 8, 9, 10}
    double phi_perturb = 0.0;  // added to the analytic optimal phase (fault injection)
};

// Run a single criterion (1..10). Exceptions become failures with the message
// in `detail`; nothing escapes.
CriterionResult run_criterion(int id, const VerifyOptions& opts = {});

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts = {});

}  // namespace magmech
