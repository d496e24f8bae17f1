#pragma once

#include <stdexcept>
#include <string>

namespace schurcone {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Comparing or combining graded objects of different degrees.
struct WeightMismatchError : Error {
    explicit WeightMismatchError(const std::string& msg) : Error(msg) {}
};

/// The bump lambda[rho] is not defined for the given arguments.
struct BumpUndefinedError : Error {
    explicit BumpUndefinedError(const std::string& msg) : Error(msg) {}
};

/// A configured size bound was exceeded.
struct BoundExceededError : Error {
    explicit BoundExceededError(const std::string& msg) : Error(msg) {}
};

/// Malformed textual input (partition/multiset/rational strings).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// The global deadline (--timeout-secs) expired.
struct TimeoutError : Error {
    explicit TimeoutError(const std::string& msg) : Error(msg) {}
};

}  // namespace schurcone
