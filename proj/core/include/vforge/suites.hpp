#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vforge/report.hpp"

namespace vforge {

struct SuiteOptions {
    std::uint64_t seed = 1;
    int jobs = 1;
    bool zeroRuntime = false;
    std::map<std::string, std::string> params; // config file + CLI overrides
};

struct SuiteResult {
    std::vector<VerificationReport> reports;
    bool all_pass = true;
};

// Suite identifiers accepted by run_suite (excluding "all").
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Runs one named suite (or "all") with default grids matching the
// acceptance criteria; parameters can shrink/override the grids.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

} // namespace vforge
