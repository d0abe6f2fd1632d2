#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace hardylab {

// Structured outcome of a single check: the computed quantity, the reference
// it is measured against, the tolerance in force, and the verdict.
struct VerificationReport {
    std::string check;
    bool passed = false;
    double value = 0.0;     // computed quantity
    double oracle = 0.0;    // reference value
    double tolerance = 0.0; // allowed |value - oracle|
    double stderr_ = 0.0;   // combined standard error when Monte Carlo is involved
    std::uint64_t seed = 0;
    std::map<std::string, double> details;
    std::string note;
};

} // namespace hardylab
