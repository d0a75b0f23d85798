#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vcr/common.hpp"

namespace vcr::suite {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteOptions {
    std::uint64_t seed = 20240801;
    double scale = 1.0;  // multiplies the randomized instance counts
    std::uint64_t budget = 100'000'000;
};

std::vector<std::string> suite_names();

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

// Runs every suite, printing one pass/fail line each; returns true when all
// pass.
bool run_all(const SuiteOptions& opt, std::ostream& out);

}  // namespace vcr::suite
