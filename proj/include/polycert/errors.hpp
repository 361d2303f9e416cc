#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polycert {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed form text. `position()` is a byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

/// A computation would exceed its term-count or enumeration budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A certificate document that is not valid JSON or lacks required fields.
class DocumentError : public Error {
public:
    using Error::Error;
};

}  // namespace polycert
