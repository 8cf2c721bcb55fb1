#pragma once

#include <stdexcept>
#include <string>

namespace modparam {

// Every failure raised by the library derives from modparam::Error so that
// callers (notably the CLI) can separate mathematical refusals from bugs.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two truncated series with different orders were combined.
class OrderMismatch : public Error {
public:
    using Error::Error;
};

/// Division by a series whose constant term vanishes.
class NonUnitDivisor : public Error {
public:
    using Error::Error;
};

/// Substitution of a series with nonzero constant term.
class CompositionDomain : public Error {
public:
    using Error::Error;
};

/// Reversion of a series not of the form T + O(T^2).
class ReversionDomain : public Error {
public:
    using Error::Error;
};

/// An argument outside the mathematical domain of an operation
/// (singular curve, k < 4 for G_k, prime < 5, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A requested coefficient lies beyond the available truncation order.
class OrderError : public Error {
public:
    using Error::Error;
};

/// Numerical evaluation refused: Im(z) <= 0.
class HalfPlaneError : public Error {
public:
    using Error::Error;
};

/// Numerical evaluation refused: argument sits on the pole of the
/// Weierstrass function.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Numerical evaluation refused: the truncated series is not trustworthy at
/// the requested argument.
class OutOfRadius : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string &what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace modparam
