#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "colldecay/parallel.hpp"

namespace colldecay {

struct CheckResult {
    std::string name;
    /// Worst deviation observed (or a failure count for counting checks).
    double deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    /// Replaces the tolerance of every deviation check. Counting checks
    /// (threshold crossings, sign agreement) are unaffected.
    std::optional<double> tolerance;
    Execution exec = Execution::openmp;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool all_passed() const;
};

/// Runs every invariant grid of the library: linear algebra identities,
/// state constructors, generator stationarity, relaxation against the closed
/// forms, trajectory conservation laws, closed-form measure oracles and the
/// distillation certificate.
VerifyReport run_verify(const VerifyOptions& opts = {});

/// One line per check plus a summary line.
void print_report(const VerifyReport& report, std::ostream& os);

}  // namespace colldecay
