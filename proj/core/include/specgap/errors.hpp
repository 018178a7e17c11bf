#pragma once

#include <stdexcept>
#include <string>

namespace specgap {

// Input outside the mathematical domain of a kernel (e.g. past the cs zero).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Violated caller contract (bad parity, hypothesis of a theorem not met, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An iterative scheme failed to converge; `detail` carries diagnostics and,
// for integrators, `abscissa` the point reached when the step size underflowed.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what, double abscissa_ = 0.0)
        : std::runtime_error(what), abscissa(abscissa_) {}
    double abscissa;
};

// Two independent computations of the same quantity disagree beyond tolerance.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numerically verified statement failed; this falsifies an expected
// property rather than signalling a user error.
struct PropertyViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace specgap
