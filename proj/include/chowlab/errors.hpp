#pragma once

#include <stdexcept>
#include <string>

namespace chowlab {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user-supplied parameter (CLI maps this to exit code 2).
struct ParamError : Error {
    using Error::Error;
};

// Mismatched dimensions between operands.
struct DimensionError : ParamError {
    using ParamError::ParamError;
};

// Enumeration requested beyond the configured cap.
struct CapError : ParamError {
    using ParamError::ParamError;
};

// LP has no feasible point (CLI maps this to exit code 3).
struct InfeasibleError : Error {
    using Error::Error;
};

// LP feasible point is not a ±1 table within the snap tolerance.
struct NonIntegralError : Error {
    double max_deviation;
    explicit NonIntegralError(const std::string& msg, double dev)
        : Error(msg), max_deviation(dev) {}
};

}  // namespace chowlab
