#pragma once

#include <string>
#include <vector>

namespace spheredeg {

/// One violated rule, with a human-readable location.
struct Violation {
    std::string rule;
    std::string detail;
};

/// Result of a validity check. Empty violation list means the object passed.
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    void add(std::string rule, std::string detail) {
        violations.push_back({std::move(rule), std::move(detail)});
    }
};

/// Result of an exhaustive verification sweep.
///
/// counterexamples holds one printable description per failed check;
/// an empty list means every checked instance passed.
struct VerificationReport {
    std::string suite;
    long long instances_checked = 0;
    long long checks_performed = 0;
    std::vector<std::string> counterexamples;
    double duration_seconds = 0.0;

    bool pass() const { return counterexamples.empty(); }
};

}  // namespace spheredeg
