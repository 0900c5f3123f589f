#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace covario {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

// Runs the acceptance criteria (all when `only` is 0, otherwise the single
// criterion with that id, 1..10).
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 42, int only = 0);

}  // namespace covario
