#pragma once

#include <stdexcept>
#include <string>

namespace smalltl {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A quantity was evaluated at a root of unity where its denominator vanishes,
/// or an idempotent was requested outside its specializable range.
struct PoleAtRootOfUnity : Error {
    using Error::Error;
};

/// Sources/targets (strand counts, matrix dimensions) do not line up.
struct ShapeMismatch : Error {
    using Error::Error;
};

/// Operands live over different coefficient rings.
struct RingMismatch : Error {
    using Error::Error;
};

/// A basis label, weight index or strand index is outside its documented range.
struct IndexOutOfRange : Error {
    using Error::Error;
};

/// An exact linear solve that is expected to succeed did not.
struct SolverFailure : Error {
    using Error::Error;
};

/// Malformed textual input; the message carries a character position.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace smalltl
