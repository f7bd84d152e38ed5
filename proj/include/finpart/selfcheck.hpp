#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finpart/verification.hpp"

namespace finpart::selfcheck {

// Knobs the CLI exposes. Everything else the checks pin internally: the
// closed-form sweep range (500), the triangular range (12), the shift-sweep
// bounds (sigma 6, n 25), the partition cross-check range (25), the
// multichoose bound (20) and the isomorphism node cap (7) are part of what
// is being asserted, not tuning parameters.
struct CheckOptions {
    verification::OracleBudget sweep;  // criterion 3 bounds; max_forest_nodes feeds criterion 7
    std::int64_t max_circles = 30;     // criterion 7 recurrence comparison range
};

struct CheckResult {
    int id = 0;
    std::string name;
    bool ok = false;          // the checked statement held
    double seconds = 0.0;
    double budget_seconds = 0.0;
    std::string detail;

    bool passed() const { return ok && seconds <= budget_seconds; }
};

// Runs the ten acceptance checks in order. Never throws on a failed check;
// failures carry their witnesses in `detail`.
std::vector<CheckResult> run_acceptance_checks(const CheckOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

// "criterion 4 FAIL 1.52s (budget 10s) closed-form validity sweeps: ..."
std::string one_line(const CheckResult& r);

}  // namespace finpart::selfcheck
