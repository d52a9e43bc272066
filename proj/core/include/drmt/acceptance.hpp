#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace drmt::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

std::vector<int> criterion_ids();
CriterionResult run_criterion(int id);

/// Runs the listed criteria (all when empty), printing one pass/fail line
/// each; returns the number of failures.
int run(std::ostream& os, const std::vector<int>& subset = {});

} // namespace drmt::acceptance
