#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace digitlaw::cli {

inline constexpr const char* kToolName = "digitlaw";
inline constexpr const char* kVersion = "1.0.0";

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;       // I/O, empty sample, capacity
inline constexpr int kExitUsage = 2;         // bad flags or arguments
inline constexpr int kExitBoundsViolated = 3; // analyze --require-bounds

struct CommandOutcome {
    int exit_code = kExitOk;
    /// Keys: command, base, params, result, diagnostics, meta. Null when the
    /// command failed before producing a result.
    nlohmann::ordered_json report;
};

/// Runs `digitlaw <theory|sweep|analyze|bounds> [flags]`. `args` excludes the
/// program name. `in` feeds analyze when no --input is given; rendered output
/// goes to `out` unless --out names a file; messages go to `err`.
CommandOutcome execute(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                       std::ostream& err);

/// Serialization used for `--output json`: the report without its `meta` key
/// is deterministic for identical inputs.
std::string render_json(const nlohmann::ordered_json& report);

/// Table rendering used for `--output table`.
std::string render_table(const nlohmann::ordered_json& report);

} // namespace digitlaw::cli
