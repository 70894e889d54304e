#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shapespace {

// ============================================================================
// End-to-end acceptance checks. Each check exercises one verifiable claim of
// the library with pinned tolerances and reports the measured margins; the
// same suite backs the `selftest` CLI subcommand and the acceptance test
// binary.
// ============================================================================

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;   // measured values and tolerances
    double seconds = 0.0;
};

// Runs checks 1..9. If `progress` is non-null, prints one line per check as
// it completes. Never throws for a failed check (failures are reported in
// the results); propagates only unexpected internal errors.
std::vector<CheckResult> run_acceptance_suite(std::ostream* progress);

// Runs only the toy-model checks (1..3); backs `heisenberg verify`.
std::vector<CheckResult> run_heisenberg_suite(std::ostream* progress);

// Formats one result as a single "PASS/FAIL" report line.
std::string format_check_line(const CheckResult& result);

}  // namespace shapespace
