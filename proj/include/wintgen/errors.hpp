#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wintgen {

// Malformed input text (expression syntax, bad patch spec, bad CLI value).
// CLI maps this family to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Expression syntax error with the byte offset of the offending token.
struct SyntaxError : InputError {
    SyntaxError(const std::string& msg, std::size_t at)
        : InputError(msg + " (at offset " + std::to_string(at) + ")"), offset(at) {}
    std::size_t offset;
};

// Evaluation left the smooth domain (sqrt/log of a non-positive value,
// division by zero, abs at 0, degenerate surface point...). Carries the
// printed form of the offending sub-expression when one exists.
// CLI maps this family to exit code 3.
struct DomainError : std::runtime_error {
    DomainError(const std::string& msg, std::string offending = "")
        : std::runtime_error(offending.empty() ? msg : msg + " in '" + offending + "'"),
          subexpr(std::move(offending)) {}
    std::string subexpr;
};

// Surface point where W^2 = EG - F^2 is below the regularity floor, or the
// tangent plane loses rank.
struct DegeneratePointError : DomainError {
    using DomainError::DomainError;
};

}  // namespace wintgen
