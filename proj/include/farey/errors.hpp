#pragma once

#include <stdexcept>
#include <string>

namespace farey {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An intermediate numerator/denominator left the machine word.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A precondition or structural invariant was violated by the caller's input.
class InvariantError : public Error {
public:
    using Error::Error;
};

/// A configured resource cap (order, scan length, enumeration size) was hit.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// The truncated cycle-set enumeration ran out of terms before it could
/// certify the next result.
class TruncationExhausted : public Error {
public:
    using Error::Error;
};

}  // namespace farey
