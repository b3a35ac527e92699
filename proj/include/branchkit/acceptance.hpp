#pragma once

// The ten end-to-end checks run by `branchkit verify-paper` and the
// acceptance test binary.

#include <functional>
#include <string>
#include <vector>

namespace branchkit {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;  // summary on success, first counterexample (JSON) on failure
    double seconds = 0;
    double budget = 0;   // seconds; exceeding it fails the criterion
};

struct AcceptanceOptions {
    int jobs = 1;
    bool fail_fast = false;
    std::vector<int> only;  // empty: all
};

int criterion_count();

CriterionResult run_criterion(int id, int jobs = 1);

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            const std::function<void(const CriterionResult&)>& sink = {});

// "PASS  3  title  (1.2s / 120s)  detail"
std::string format_result(const CriterionResult& r);

}  // namespace branchkit
