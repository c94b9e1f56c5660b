#pragma once

// Runtime invariant suite: each check compares a closed form against one of
// the independent oracles and reports the worst residual seen.

#include "dosusy/numerics.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dosusy::verify {

struct CheckResult {
    std::string suite;
    std::string name;
    double residual = 0;
    double tolerance = 0;
    bool passed = false;
};

/// Known suite names, in run order.
const std::vector<std::string>& suite_names();

/// Runs `suite` ("all" or one of suite_names()) with every tolerance
/// multiplied by `tolerance_scale`. Throws DomainError on an unknown suite.
std::vector<CheckResult> run(std::string_view suite, double tolerance_scale = 1.0);

/// Worst pointwise relative deviation on [lo, hi] between the Numerov zero
/// mode of `potential` (grid rho_k = k h, seeds rho^{l+1}) and `reference`,
/// after fixing the global scale at rho = 1.
double zero_mode_deviation(const numerics::RealFunction& potential,
                           const numerics::RealFunction& reference, int l, double h = 1e-4,
                           double lo = 0.1, double hi = 5.0);

} // namespace dosusy::verify
