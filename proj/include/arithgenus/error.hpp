#pragma once

#include <stdexcept>
#include <string>

namespace arithgenus {

/// Raised when an input violates a mathematical precondition (zero where a
/// unit is required, a non-prime place, an ABHN violation, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a computation hits an internal cap (factorization leftover,
/// continued-fraction iteration limit). The input may be valid but too large.
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace arithgenus
