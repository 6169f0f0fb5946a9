#ifndef WOUNDCOUNT_ACCEPTANCE_HPP
#define WOUNDCOUNT_ACCEPTANCE_HPP

#include <ostream>
#include <string>
#include <vector>

namespace woundcount {

struct AcceptanceOptions {
    unsigned workers = 1;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

// Runs the full verification suite, printing one pass/fail line per
// criterion to `log`.
std::vector<CriterionResult> run_acceptance(std::ostream& log, const AcceptanceOptions& opt = {});

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace woundcount

#endif
