#pragma once

// Cross-check suite: every structural identity, oracle agreement and
// published-data comparison, runnable at a configurable exhaustive depth.
// The CLI exposes these as `verify --suite <name>`.

#include <string>
#include <vector>

namespace involab {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int max_n = 12;   // cap on exhaustive depths
    int threads = 1;  // enumeration parallelism
};

// Suites: perm, enumerate, series, staircase, coloring, growth, props, all.
std::vector<std::string> verification_suites();
std::vector<CheckResult> run_verification(const std::string& suite, const VerifyOptions& opts);

}  // namespace involab
