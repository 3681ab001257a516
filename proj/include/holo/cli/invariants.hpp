#pragma once

#include <functional>
#include <string>
#include <vector>

namespace holo::cli {

/// A property check. `measure` returns a nonnegative defect; the check
/// passes when defect < threshold * tolerance_scale.
struct Invariant {
    std::string module;
    std::string name;
    double threshold = 0.0;
    std::function<double()> measure;

    std::string id() const { return module + "." + name; }
};

struct InvariantOutcome {
    std::string id;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string error;  // set when the measurement threw
};

const std::vector<Invariant>& invariant_registry();

/// Runs every registered invariant. A measurement that throws is a failure
/// with measured = inf.
std::vector<InvariantOutcome> run_invariants(double tolerance_scale = 1.0);

/// "PASS|FAIL <module>.<invariant> <measured> <threshold>".
std::string format_outcome(const InvariantOutcome& o);

}  // namespace holo::cli
