#include "drmt/acceptance.hpp"

#include <ostream>

namespace drmt::acceptance {

// Placeholder registry while the suites are being brought up; replaced by the
// full criterion set below in this file's final form.
std::vector<int> criterion_ids() { return {}; }

CriterionResult run_criterion(int id) {
    CriterionResult r;
    r.id = id;
    r.name = "unknown";
    r.pass = false;
    r.detail = "criterion not implemented";
    return r;
}

int run(std::ostream& os, const std::vector<int>& subset) {
    (void)subset;
    os << "no criteria registered\n";
    return 1;
}

} // namespace drmt::acceptance
