#pragma once

#include <stdexcept>
#include <string>

namespace framedual {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Vector/matrix shapes do not agree (also covers index misalignment).
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// The given family of vectors does not span the space.
class NotAFrame : public Error {
public:
    using Error::Error;
};

/// The k-by-k coefficient matrix of the reduced-dual construction is
/// singular; the matrix method does not apply.
class SingularAxz : public Error {
public:
    using Error::Error;
};

/// The full-dimension operator of the reduced-dual construction is
/// singular; the operator method does not apply.
class SingularOperator : public Error {
public:
    using Error::Error;
};

/// Random instance generation could not produce an erasure set whose
/// complement still spans, within the retry budget.
class MrcUnattainable : public Error {
public:
    using Error::Error;
};

/// Malformed frame file or I/O failure.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Invalid benchmark/CLI configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace framedual
