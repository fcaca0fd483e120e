#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyperboot {

struct SuiteOptions {
    std::uint64_t seed = 1729;
    int instances = 0;  // 0 = suite default
};

struct SuiteReport {
    std::string suite;
    bool passed = false;
    int checks = 0;
    std::vector<std::string> failures;
    std::string repro;  // text dump of the first failing instance
};

std::vector<std::string> suite_names();

// Runs one named property suite at desk scale. Throws std::invalid_argument
// for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace hyperboot
