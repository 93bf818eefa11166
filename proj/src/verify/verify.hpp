#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace autoseq {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    bool pass = true;
    double seconds = 0;
};

// The pinned verification battery; ids 1..13.
int num_criteria();
CriterionResult run_criterion(int id, int threads = 0);

// Suites for the CLI verify command: identities, profiles, bounds, oracles,
// ff, statistical. Each maps onto a fixed subset of the criteria.
const std::vector<std::string>& verify_suites();
std::vector<int> suite_criteria(const std::string& suite);

} // namespace autoseq
