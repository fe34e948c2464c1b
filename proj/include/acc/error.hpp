#pragma once

#include <stdexcept>
#include <string>

namespace acc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad parameter set (non-positive scale, non-integer Erlang shape, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// An iterative solver failed to bracket or converge.
struct ConvergenceError : Error {
    using Error::Error;
};

/// Malformed config or observation file; message carries the line number.
struct ParseError : Error {
    using Error::Error;
};

struct MixedFamilyError : ValidationError {
    using ValidationError::ValidationError;
};

struct MixedShapeError : ValidationError {
    using ValidationError::ValidationError;
};

}  // namespace acc
