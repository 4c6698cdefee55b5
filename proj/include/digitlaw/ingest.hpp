#pragma once

#include "digitlaw/empirical.hpp"

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace digitlaw {

enum class InputFormat { Plain, Delimited, Spectrum2Col };

std::string_view to_string(InputFormat format) noexcept;
InputFormat parse_format(std::string_view text);

struct InputSpec {
    InputFormat format = InputFormat::Plain;
    char delimiter = ',';             // delimited only
    std::size_t column = 1;           // delimited only, 1-based
    std::string comment_prefix = "#";
    bool decimal_token_capture = true;

    /// Throws Error(Usage) for column 0 or a delimiter that is unprintable,
    /// a digit, a sign, or a decimal point.
    void validate() const;
};

struct ParsedRecord {
    double value = 0.0;
    std::string token;
    std::size_t line = 0;         // 1-based
    std::size_t column_index = 0; // 1-based field (plain: token position on the line)
};

struct Diagnostic {
    std::size_t line = 0;
    std::string message;
};

struct ParseResult {
    std::vector<ParsedRecord> records;
    std::vector<Diagnostic> diagnostics;
};

/// Parses a line-oriented numeric dataset.
///
///  - plain: every whitespace-separated numeral on each line; a token that
///    starts with the comment prefix ends the line.
///  - delimited: field `column` of each line split on `delimiter`.
///  - spectrum2col: second field of each line split on whitespace or commas
///    (wavenumber, absorbance); later fields are ignored.
///
/// Lines whose first non-blank characters are the comment prefix, and blank
/// lines, are skipped. Malformed fields are skipped with a diagnostic. Lines
/// end at LF, with an optional CR before it.
///
/// Throws Error(Io) if the stream goes bad, Error(Structural) when a
/// delimited input has data lines but none of them has the requested column.
ParseResult parse_dataset(const InputSpec& spec, std::istream& in);
ParseResult parse_dataset(const InputSpec& spec, std::string_view text);

/// Parses one decimal numeral (see is_decimal_numeral). Throws Error(Parse).
double parse_numeral(std::string_view token);

/// Records to tally input; tokens are attached when decimal_token_capture is on.
std::vector<Observation> to_observations(const ParseResult& parsed, bool keep_tokens);

} // namespace digitlaw
