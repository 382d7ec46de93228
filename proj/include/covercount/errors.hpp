#pragma once

#include <stdexcept>
#include <string>

namespace covercount {

// Base class of every error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact polynomial division left a nonzero remainder.
struct NotDivisible : Error {
    using Error::Error;
};

// A product or shift pushed an exponent below the hbar window; this always
// indicates a bookkeeping bug in the caller, never a recoverable condition.
struct WindowUnderflow : Error {
    using Error::Error;
};

// log/exp of a series whose constant term is not the required value.
struct BadConstantTerm : Error {
    using Error::Error;
};

// Requested slice or coefficient lies outside the assembled bounds.
struct OutOfBounds : Error {
    using Error::Error;
};

// An enumeration would exceed its step budget; raised before any work.
struct BudgetExceeded : Error {
    using Error::Error;
};

// Input exceeds a configured size bound.
struct BoundExceeded : Error {
    using Error::Error;
};

// A character table entry failed the integrality check.
struct NonIntegerEntry : Error {
    using Error::Error;
};

// Riemann-Hurwitz bookkeeping produced a half-integer genus.
struct NonIntegerGenus : Error {
    using Error::Error;
};

// A structural invariant failed; internal bug.
struct InvariantViolation : Error {
    using Error::Error;
};

// Malformed user-facing text input (partitions, rationals, flags).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace covercount
