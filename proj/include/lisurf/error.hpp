#pragma once

#include <stdexcept>
#include <string>

namespace lisurf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad parameters, schema violations).
class InputError : public Error {
public:
    using Error::Error;
};

/// A construction hit a degenerate configuration (coincident points,
/// vanishing pairings, orthogonal lifts).
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// A spectral parameter sits on (or too close to) a pole of the connection.
class PoleError : public Error {
public:
    using Error::Error;
};

/// An edge form or connection failed its closure/flatness test.
class NotClosedError : public Error {
public:
    using Error::Error;
};

}  // namespace lisurf
