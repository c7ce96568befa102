#pragma once

#include "p3b/records.hpp"

#include <string>
#include <vector>

namespace p3b {

struct SuiteFailure {
    std::string suite;
    std::string inputs;
    std::string expected;
    std::string actual;
};

struct SuiteResult {
    std::string name;
    Int passed = 0;
    Int failed = 0;
    std::vector<SuiteFailure> failures; // one entry per failed check
};

struct VerifyReport {
    std::vector<SuiteResult> suites;

    Int checks_passed() const;
    Int checks_failed() const;
    bool ok() const { return checks_failed() == 0; }
};

std::vector<std::string> verify_suite_names();

// Run the invariant suites over the default grids.  An empty filter runs all.
VerifyReport run_verify(const std::vector<std::string>& only = {});

Json verify_report_to_json(const VerifyReport& report);

} // namespace p3b
