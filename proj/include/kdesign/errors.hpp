#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kdesign {

// Argument outside an operation's domain (bad vertex, k > n, j > k, ...) is
// reported as std::domain_error. The types below cover the remaining cases.

// Input data violates a structural invariant (variety id >= v, unsorted block).
class MalformedInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operation called on a value it is not defined for, e.g. a t-design check on
// a design whose blocks do not all have the same size.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Requested construction would exceed the configured block ceiling.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace kdesign
