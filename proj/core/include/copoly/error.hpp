#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace copoly {

/// Input exceeds a size limit of the requested computation.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Edge argument is not an edge of the graph.
class InvalidEdgeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two computation routes that must agree did not. Always a bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Floating-point iteration failed to converge.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace copoly
