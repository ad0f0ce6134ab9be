#pragma once

#include <stdexcept>
#include <string>

namespace dihom {

// Malformed textual input (files, literals, flags).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed input that violates an operation's precondition.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A golden value did not reproduce, or an inequality that must hold failed.
class MathViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dihom
