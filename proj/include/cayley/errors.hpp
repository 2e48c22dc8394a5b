#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cayley {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- group construction / arithmetic ----------------------------------

struct GroupError : Error {
    using Error::Error;
};

struct NotLatinSquare final : GroupError {
    using GroupError::GroupError;
};

struct NoIdentityAtIndexZero final : GroupError {
    using GroupError::GroupError;
};

struct NotAssociative final : GroupError {
    using GroupError::GroupError;
};

struct DuplicateLabel final : GroupError {
    using GroupError::GroupError;
};

struct ReservedLabelX final : GroupError {
    using GroupError::GroupError;
};

struct UnknownName final : GroupError {
    using GroupError::GroupError;
};

struct GroupMismatch final : GroupError {
    using GroupError::GroupError;
};

/// Group file could not be parsed; carries the 1-based line number.
struct GroupFileError final : GroupError {
    GroupFileError(std::size_t line, const std::string& what)
        : GroupError("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

// ---- coefficient matrix ------------------------------------------------

struct IndexOutOfRange final : Error {
    using Error::Error;
};

struct CoeffRangeExceeded final : Error {
    using Error::Error;
};

// ---- machines ----------------------------------------------------------

struct NotInvertible final : Error {
    NotInvertible(int state, const std::string& what) : Error(what), state(state) {}
    int state;
};

struct AlphabetMismatch final : Error {
    using Error::Error;
};

struct StateBudgetExceeded final : Error {
    using Error::Error;
};

struct LetterOutOfRange final : Error {
    using Error::Error;
};

struct ActionCostExceeded final : Error {
    using Error::Error;
};

// ---- word parsing ------------------------------------------------------

/// Carries the 1-based character position of the offending input.
struct SyntaxError final : Error {
    SyntaxError(std::size_t position, const std::string& what)
        : Error("position " + std::to_string(position) + ": " + what), position(position) {}
    std::size_t position;
};

struct UnknownLabel final : Error {
    explicit UnknownLabel(const std::string& label)
        : Error("unknown label '" + label + "'"), label(label) {}
    std::string label;
};

struct ZeroExponent final : Error {
    explicit ZeroExponent(std::size_t position)
        : Error("position " + std::to_string(position) + ": exponent must be nonzero"),
          position(position) {}
    std::size_t position;
};

struct WordTooLarge final : Error {
    using Error::Error;
};

// ---- normal forms ------------------------------------------------------

struct ClassTooHigh final : Error {
    using Error::Error;
};

}  // namespace cayley
