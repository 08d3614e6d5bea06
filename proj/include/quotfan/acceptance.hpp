#pragma once

#include <string>
#include <vector>

namespace quotfan {

struct CriterionResult {
    std::string id;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the full verification suite (one entry per criterion).
std::vector<CriterionResult> run_acceptance();

} // namespace quotfan
