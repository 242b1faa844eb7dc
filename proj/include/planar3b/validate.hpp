#pragma once

// Built-in acceptance checks. Each criterion is a self-contained numerical
// experiment with pinned tolerances; `only` restricts the run to one module.

#include <functional>
#include <string>
#include <vector>

#include "planar3b/config.hpp"

namespace planar3b {

struct CriterionResult {
    int id = 0;
    std::string module;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct ValidationReport {
    std::vector<CriterionResult> results;
    bool all_pass() const;
};

/// Module names accepted by `only`, in criterion order.
const std::vector<std::string>& validation_modules();

/// `PASS  3 potentials  <title>  (<detail>, <seconds> s)`
std::string format_result(const CriterionResult& r);

/// Runs the criteria (all when `only` is empty). `on_result` is called after
/// each criterion. Throws ConfigError for an unknown module name.
ValidationReport run_validation(const RunConfig& cfg, const std::string& only = "", int jobs = 1,
                                const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace planar3b
