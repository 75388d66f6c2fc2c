// Exception hierarchy shared by every folinv module.  All library errors
// derive from folinv::Error so callers can distinguish bad input from a
// genuine mathematical failure (which is reported through return values,
// never exceptions).
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace folinv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parser diagnostics carry the byte offset of the offending token.
struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(std::size_t off, const std::string& what)
        : Error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

struct UnknownVariable : SyntaxError {
    using SyntaxError::SyntaxError;
};

struct ZeroCoefficient : SyntaxError {
    using SyntaxError::SyntaxError;
};

struct EmptyForm : Error {
    using Error::Error;
};

struct ZeroPolynomial : Error {
    using Error::Error;
};

struct NotDivisible : Error {
    using Error::Error;
};

struct NotUnitangent : Error {
    using Error::Error;
};

struct ExponentOverflow : Error {
    using Error::Error;
};

struct NotCoprime : Error {
    using Error::Error;
};

struct ZeroForm : Error {
    using Error::Error;
};

struct NotInvariant : Error {
    using Error::Error;
};

struct NotSquarefree : Error {
    using Error::Error;
};

struct NotIsolated : Error {
    using Error::Error;
};

struct RegularFoliation : Error {
    using Error::Error;
};

struct InfiniteIntersection : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

struct MaxStepsExceeded : Error {
    using Error::Error;
};

struct NotPrimitive : Error {
    using Error::Error;
};

struct TruncationInsufficient : Error {
    using Error::Error;
};

struct NonReducedForGSV : Error {
    using Error::Error;
};

struct InvalidInput : Error {
    using Error::Error;
};

// Violated internal assumption; indicates a bug, not bad user input.
struct InternalError : Error {
    using Error::Error;
};

} // namespace folinv
