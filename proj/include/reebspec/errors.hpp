#pragma once

#include <stdexcept>
#include <string>

namespace reebspec {

struct FieldMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZeroError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RationalInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an adaptive-precision decision hits its bit cap without
// separating the value from an integer. Signals input suspiciously close
// to (or exactly at) an integer, never a wrong answer.
struct PrecisionExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SubsequenceViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two distinct iterates share an action; the spectrum has a rational
// action-ratio leak and cannot be ordered strictly.
struct ActionTieError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct KindError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bounded search ran out of budget; carries the cap that was exhausted.
struct NotFoundError : std::runtime_error {
    explicit NotFoundError(const std::string& what, long long cap_)
        : std::runtime_error(what), cap(cap_) {}
    long long cap;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace reebspec
