#pragma once

#include <stdexcept>
#include <string>

#include "gcoalg/report.hpp"

namespace gcoalg {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two values from different fields were combined.
struct FieldMismatch : Error {
    using Error::Error;
};

/// Matrix dimensions do not match the operation's contract.
struct ShapeMismatch : Error {
    using Error::Error;
};

/// A prime-field modulus failed the primality check.
struct NotPrime : Error {
    using Error::Error;
};

/// A multiplication table is not a group; the message names the witness.
struct NotAGroup : Error {
    using Error::Error;
};

/// Input text could not be parsed into the requested object.
struct ParseError : Error {
    using Error::Error;
};

/// A loaded object failed its structural verifier; the report carries
/// the witnesses.
struct ValidationError : Error {
    Report report;

    explicit ValidationError(const std::string& msg) : Error(msg) {}
    ValidationError(const std::string& msg, Report r) : Error(msg), report(std::move(r)) {}
};

/// Crossed-coproduct input data violates the coherence conditions.
struct InvalidCrossedData : Error {
    using Error::Error;
};

/// An operation was called outside its stated precondition.
struct PreconditionViolated : Error {
    using Error::Error;
};

/// A smash comodule's grade idempotents do not sum to the identity.
struct NotGradable : Error {
    using Error::Error;
};

/// A smash comodule coaction has support outside the admissible grades.
struct SupportViolation : Error {
    using Error::Error;
};

/// A cohomology operation was applied to a non-cocommutative coalgebra.
struct NotCocommutative : Error {
    using Error::Error;
};

/// Internal consistency failure: a proved identity did not hold.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace gcoalg
