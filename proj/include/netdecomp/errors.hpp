#pragma once

#include <stdexcept>
#include <string>

namespace netdecomp {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input document (bad JSON, bad rational literal, wrong schema).
struct ParseError : Error {
    using Error::Error;
};

// Well-formed document that violates a model invariant (names the offender).
struct ValidationError : Error {
    using Error::Error;
};

// Operand shapes do not match the operation.
struct DimensionMismatch : Error {
    using Error::Error;
};

// Square matrix with rank below its dimension passed to invert().
struct SingularMatrix : Error {
    using Error::Error;
};

// An internal guarantee failed; always an implementation bug, never bad input.
struct InvariantViolation : Error {
    using Error::Error;
};

// A completion-set choice whose square block is singular.
struct InvalidChoice : Error {
    using Error::Error;
};

// Exhaustive enumeration would exceed the configured subset budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

// Results fed to partition() come from different systems.
struct MismatchedSystem : Error {
    using Error::Error;
};

}  // namespace netdecomp
