#pragma once

#include <functional>
#include <string>
#include <vector>

namespace wmorrey {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the built-in acceptance suite. `report` is called after each criterion.
std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& report = {});

/// One line per criterion: "[PASS] 3 weak <= strong: ...".
std::string format_line(const CriterionResult& r);

}  // namespace wmorrey
