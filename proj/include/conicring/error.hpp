#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conicring {

/// Base of every error the library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid user input. The CLI maps these to exit code 1.
class InputError : public Error {
public:
    using Error::Error;
};

/// A configured search or factoring bound was hit. The CLI maps these to exit code 2.
class ResourceError : public Error {
public:
    using Error::Error;
};

class InvalidConic : public InputError {
public:
    using InputError::InputError;
};

class ParseError : public InputError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class IndexOutOfRange : public InputError {
public:
    using InputError::InputError;
};

class ZeroElement : public InputError {
public:
    using InputError::InputError;
};

class FactorBoundExceeded : public ResourceError {
public:
    using ResourceError::ResourceError;
};

class SearchBoundExceeded : public ResourceError {
public:
    using ResourceError::ResourceError;
};

}  // namespace conicring
