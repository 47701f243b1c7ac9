#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace kecs {

/// One bundled verification claim: a named check with a pass/fail outcome.
struct ClaimResult {
    std::string id;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct ClaimOptions {
    int jobs = 0;             // 0 = hardware concurrency
    std::string only;         // comma-separated claim id filter, empty = all
    bool inject_fault = false;  // force a known-bad expectation, for testing the failure path
    std::ostream* log = nullptr;  // per-claim progress lines
};

std::vector<std::string> claim_ids();
std::vector<ClaimResult> run_claims(const ClaimOptions& opt);

}  // namespace kecs
