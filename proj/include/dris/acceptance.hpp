// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dris/scenario.hpp"

namespace dris {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the acceptance criteria (all when `only` is empty) on top of `base`,
/// which supplies the geometry, budget and master seed. `on_result` is
/// called as each criterion finishes.
std::vector<CriterionResult> run_acceptance(const ScenarioConfig& base, const std::vector<int>& only = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result_line(const CriterionResult& r);

}  // namespace dris
