#pragma once

#include <stdexcept>
#include <string>

namespace dnlsat {

// Violated internal invariant. Reaching one of these is a bug; the engine
// converts it into an `unknown` answer rather than an unsound one.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller violated an operation's precondition (degenerate degree, empty set...).
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

} // namespace dnlsat
