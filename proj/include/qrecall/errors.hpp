#pragma once

#include <stdexcept>

namespace qrecall {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionTooSmall : Error {
    using Error::Error;
};

struct ZeroVector : Error {
    using Error::Error;
};

struct NotNormalized : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct InvalidEpsilon : Error {
    using Error::Error;
};

// Internal consistency check failed (dual-route disagreement, bound violation).
struct NumericalFailure : Error {
    using Error::Error;
};

// Norm drifted past tolerance during an iterated run.
struct NumericalDrift : NumericalFailure {
    using NumericalFailure::NumericalFailure;
};

struct DegenerateDraw : Error {
    using Error::Error;
};

struct DegenerateFit : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace qrecall
