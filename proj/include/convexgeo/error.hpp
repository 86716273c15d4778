#pragma once

#include <stdexcept>
#include <string>

namespace convexgeo {

// Root of every error the library throws. Callers that only care about
// failure vs. success can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input (unknown label, empty hull, ...).
class InputError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// The pair (premise, u) is not an implication of the closure system.
class NotAnImplicationError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// Numerical input sits too close to a tangency for the tolerance in use,
// so the induced family is not a closure system of the expected kind.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

// A request would exceed a configured resource guard.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Text input could not be parsed. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& message)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace convexgeo
