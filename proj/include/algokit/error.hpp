#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace algokit {

/// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the operation's domain (gcd(0, 0), n < 2 for factorisation, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A checked 64-bit computation would have wrapped.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Invalid configuration value, e.g. a split fraction outside (0, 1).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input. `position()` is a zero-based character offset when known.
class ParseError : public Error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit ParseError(const std::string& what, std::size_t position = npos)
        : Error(position == npos ? what : what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Table schema violations: unknown columns, type mismatches, ragged rows.
class SchemaError : public Error {
public:
    using Error::Error;
};

}  // namespace algokit
