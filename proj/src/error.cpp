#include "digitlaw/error.hpp"

namespace digitlaw {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Domain: return "domain error";
        case ErrorCode::Capacity: return "capacity error";
        case ErrorCode::Parse: return "parse error";
        case ErrorCode::Usage: return "usage error";
        case ErrorCode::EmptySample: return "empty sample";
        case ErrorCode::DegenerateBase: return "degenerate base";
        case ErrorCode::UndefinedCorrelation: return "undefined correlation";
        case ErrorCode::DegenerateExpectation: return "degenerate expectation";
        case ErrorCode::Io: return "I/O error";
        case ErrorCode::Structural: return "structural error";
    }
    return "error";
}

void fail(ErrorCode code, const std::string& message) {
    throw Error(code, std::string(to_string(code)) + ": " + message);
}

} // namespace digitlaw
