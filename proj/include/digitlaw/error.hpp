#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace digitlaw {

enum class ErrorCode {
    Domain,                // argument outside an operation's domain
    Capacity,              // exact integer result does not fit in 64 bits
    Parse,                 // malformed numeral or field
    Usage,                 // inconsistent arguments (base mismatch, empty lists, bad flags)
    EmptySample,           // no usable leading digits
    DegenerateBase,        // base 2 has a single digit; correlation is undefined
    UndefinedCorrelation,  // zero variance on one side
    DegenerateExpectation, // an expected chi-square cell count is zero
    Io,
    Structural,            // input never contains the requested column
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library. `code()` tells callers (the CLI in
/// particular) which failure class they are looking at.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

} // namespace digitlaw
