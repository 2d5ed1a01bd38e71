#pragma once

#include <stdexcept>
#include <string>

namespace ribbon {

// Malformed text input (polynomials, codes, CLI values).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed input that violates a mathematical or schema constraint.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Enumeration asked for more work than the configured budget allows.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ribbon
