// Acceptance gate: one criterion per invocation (argv[1] = 1..10), or the
// full suite with no arguments. Prints one PASS/FAIL line per criterion.

#include <cstdlib>
#include <iostream>

#include "magmech/verify.hpp"

int main(int argc, char** argv) {
    using magmech::CriterionResult;
    std::vector<CriterionResult> results;
    if (argc > 1) {
        results.push_back(magmech::run_criterion(std::atoi(argv[1])));
    } else {
        results = magmech::run_acceptance();
    }
    bool all_ok = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name
                  << "): " << r.detail << "\n";
        all_ok = all_ok && r.pass;
    }
    return all_ok ? 0 : 1;
}
