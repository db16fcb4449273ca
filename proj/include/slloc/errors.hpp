#pragma once

#include <stdexcept>
#include <string>

namespace slloc {

/// Bad inputs or violated preconditions. Maps to CLI exit code 1.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A numerical procedure failed or degenerated. Maps to CLI exit code 2.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadInterval : ValidationError {
    using ValidationError::ValidationError;
};
struct NonPositiveCoefficient : ValidationError {
    using ValidationError::ValidationError;
};
struct NegativePotential : ValidationError {
    using ValidationError::ValidationError;
};
struct UnknownPreset : ValidationError {
    using ValidationError::ValidationError;
};
struct ConfigError : ValidationError {
    using ValidationError::ValidationError;
};
struct EvenNodeCount : ValidationError {
    using ValidationError::ValidationError;
};
struct TooFewNodes : ValidationError {
    using ValidationError::ValidationError;
};
struct ZeroFunction : ValidationError {
    using ValidationError::ValidationError;
};
struct IndexOutOfRange : ValidationError {
    using ValidationError::ValidationError;
};
struct DegenerateGap : ValidationError {
    using ValidationError::ValidationError;
};
struct OutOfWindow : ValidationError {
    using ValidationError::ValidationError;
};
struct NegativeDenominator : ValidationError {
    using ValidationError::ValidationError;
};

struct SingularPivot : NumericalError {
    using NumericalError::NumericalError;
};
struct ConvergenceFailure : NumericalError {
    using NumericalError::NumericalError;
};
struct InverseInterpolationFailure : NumericalError {
    using NumericalError::NumericalError;
};
struct DegenerateDenominator : NumericalError {
    using NumericalError::NumericalError;
};
struct NonPositiveLandscape : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace slloc
