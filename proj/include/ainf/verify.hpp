#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ainf {

struct CheckResult {
    std::string name;
    bool passed = false;
    double metric = 0.0;  // worst error or deviation observed
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// Quick self-checks of each module's invariants on seeded random inputs.
std::vector<std::string> suite_names();
/// Throws InvalidArgument for an unknown suite.
SuiteReport run_suite(const std::string& name, std::uint64_t seed);

}  // namespace ainf
