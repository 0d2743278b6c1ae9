#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace equiblow {

// Every failure raised by the toolkit derives from Error.  The CLI maps the
// concrete type onto its exit code, so new error kinds must pick a base here.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
    explicit ParseError(const std::string& what) : Error(what), position(0) {}
    std::size_t position;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct UnsupportedError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

// Raised when a statement that must hold on valid inputs fails.  These are
// the loud alarms of the toolkit; valid inputs never trigger them.
struct TheoremCheckFailure : Error {
    TheoremCheckFailure(std::string check_name, const std::string& detail)
        : Error(check_name + ": " + detail), check(std::move(check_name)) {}
    std::string check;
};

}  // namespace equiblow
