#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace octoder {

/// Base class of every exception thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mixing values that live over different fields (e.g. Q and GF(5)).
struct FieldMismatchError : Error {
    using Error::Error;
};

/// Inverting or dividing by zero.
struct DivisionByZeroError : Error {
    using Error::Error;
};

/// Shape disagreement: vector lengths, matrix dimensions, ambient dimensions.
struct DimensionError : Error {
    using Error::Error;
};

/// Rejected field description: modulus 2, composite modulus, malformed spec.
struct InvalidFieldError : Error {
    using Error::Error;
};

/// A family of maps fails to be closed under the commutator.
struct ClosureError : Error {
    using Error::Error;
};

/// A value table is queried at a point it does not cover.
struct ProbeError : Error {
    using Error::Error;
};

/// Malformed input text; carries the 1-based line number when known.
struct ParseError : Error {
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace octoder
