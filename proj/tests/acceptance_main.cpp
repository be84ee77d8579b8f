// SPDX-License-Identifier: Apache-2.0
// Prints one PASS/FAIL line per acceptance criterion; non-zero exit on any failure.
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "dris/acceptance.hpp"
#include "dris/scenario.hpp"

int main(int argc, char** argv) {
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
    dris::ScenarioConfig cfg;
    if (const char* env = std::getenv("DRIS_SEED"); env && *env) cfg.seed = std::strtoull(env, nullptr, 0);
    int failed = 0;
    dris::run_acceptance(cfg, only, [&](const dris::CriterionResult& r) {
        failed += r.passed ? 0 : 1;
        std::cout << dris::format_result_line(r) << std::endl;
    });
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failed ? 1 : 0;
}
