#pragma once

#include <stdexcept>
#include <string>

namespace cycoh {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A column of the right-hand side is not in the integer span of the basis.
struct NoSolutionError : Error {
    using Error::Error;
};

/// A module, map or surface description violates a structural invariant
/// (non-square action, T^m != I, bad divisibility chain, ...).
struct InvalidInputError : Error {
    using Error::Error;
};

struct InvalidIndexError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct InvalidOrderError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct OrderMismatchError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct ModulusMismatchError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct DegreeNotCoveredError : Error {
    using Error::Error;
};

struct TorsionFixedLocusError : Error {
    using Error::Error;
};

struct NotComposableError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct IllFormedMapError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct InadmissibleSurfaceError : Error {
    using Error::Error;
};

/// Malformed JSON or a value that does not match the expected schema.
struct SchemaError : Error {
    using Error::Error;
};

}  // namespace cycoh
