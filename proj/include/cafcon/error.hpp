#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cafcon {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument id or attack endpoint outside the framework.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Malformed DIMACS or CAF text. `line()` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Input exceeds an enumeration cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Formula violates an input assumption of the reduction.
class PreconditionError : public Error {
public:
    PreconditionError(std::size_t clause_index, const std::string& what)
        : Error(what), clause_index_(clause_index) {}

    std::size_t clause_index() const noexcept { return clause_index_; }

private:
    std::size_t clause_index_;
};

/// Raised when two routes that must agree do not. Always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace cafcon
