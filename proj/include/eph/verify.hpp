#pragma once

#include <string>
#include <vector>

namespace eph {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct VerifyOptions {
    unsigned seed = 20240917;
    std::string only;             // substring filter, empty = all
    bool inject_sign_error = false; // test hook: corrupt one expected sign
};

/// Runs the ladder/representation/Heisenberg/covariant invariant suites and
/// the closed-form probability checks.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

} // namespace eph
