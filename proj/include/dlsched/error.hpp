#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dlsched {

enum class ErrorKind {
    // instance validation
    NonPositiveA0,
    AlphaOutOfRange,
    NegativeRate,
    NegativeStart,
    EmptyJobs,
    JobCountMismatch,
    NonFiniteValue,
    // sequence validation
    WrongLength,
    DuplicateJob,
    IndexOutOfRange,
    // solvers
    TooLarge,
    // instances
    BadRange,
    ParseError,
    // bench
    NonPositiveOptimum,
    InconsistentResult,
    UnknownFormat,
    EmptyTable,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported as an Error carrying
/// a machine-checkable kind and a human-readable message.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace dlsched
