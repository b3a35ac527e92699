#include <cstdlib>
#include <iostream>
#include <thread>

#include "branchkit/acceptance.hpp"

int main(int argc, char** argv) {
    branchkit::AcceptanceOptions opts;
    opts.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    for (int i = 1; i < argc; ++i) opts.only.push_back(std::atoi(argv[i]));
    int failed = 0;
    branchkit::run_acceptance(opts, [&](const branchkit::CriterionResult& r) {
        std::cout << branchkit::format_result(r) << std::endl;
        failed += !r.passed;
    });
    return failed == 0 ? 0 : 1;
}
