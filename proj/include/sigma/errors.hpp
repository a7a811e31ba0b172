#pragma once

#include <stdexcept>
#include <string>

namespace sigma {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed set or expression text.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A collection that would hold an atom together with its antielement is a
/// proper class, never a set.
class ProperClassError : public Error {
public:
    using Error::Error;
};

/// Raised when an antiset is required but does not exist.
class NotEntireError : public Error {
public:
    using Error::Error;
};

/// Raised when a closed-form solve is attempted on a non-fusionable equation.
class NotFusionableError : public Error {
public:
    using Error::Error;
};

/// An enumeration guard or representation limit was exceeded.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// An argument violates a documented precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace sigma
