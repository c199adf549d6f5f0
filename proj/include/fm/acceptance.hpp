#pragma once

// End-to-end verification suite. Each check pins its tolerances in code and
// reports one pass/fail line; `verify-all` in the CLI and the ctest acceptance
// binary both run through here.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace fm {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::vector<std::string> details;  // failure diagnostics, empty on pass
    double seconds = 0;
};

struct AcceptanceOptions {
    std::uint64_t seed = 20260809;  // drives every randomized check
    bool run_rmt = true;            // criterion 9 is the only slow one
    int only = 0;                   // run a single criterion when nonzero
};

std::vector<CheckResult> run_acceptance(const AcceptanceOptions& opts, std::ostream& log);

// Prints "[PASS]/[FAIL] <n>. <name>" lines; returns true when all passed.
bool report(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace fm
