#pragma once

#include <stdexcept>

namespace hardylab {

// Base class for all library errors. The CLI maps subclasses onto exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed call arguments: dimension mismatch, non-positive scale factor, bad grid bounds.
struct InvalidInputError : Error { using Error::Error; };

// A quasi-norm that cannot live on the given group (wrong dimension or exponents).
struct IncompatibleSpecError : Error { using Error::Error; };

// Parameters outside the admissible range of the inequality at hand.
struct InadmissibleParamsError : Error { using Error::Error; };

// Test-function family whose weighted norm diverges for the given parameters.
struct InadmissibleFamilyError : Error { using Error::Error; };

// rhs == 0 with lhs > 0 in a ratio computation.
struct DegenerateInputError : Error { using Error::Error; };

// Bounding box or sampling geometry is inconsistent with the quasi-norm.
struct GeometryConfigError : Error { using Error::Error; };

// Quadrature or weight evaluation produced a non-finite value.
struct NumericError : Error { using Error::Error; };

// Monte Carlo produced no usable samples.
struct SamplingError : Error { using Error::Error; };

// Iterative solver failed to converge within its budget.
struct ConvergenceError : Error { using Error::Error; };

} // namespace hardylab
