#include "digitlaw/ingest.hpp"

#include "digitlaw/digits.hpp"
#include "digitlaw/error.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace digitlaw {

std::string_view to_string(InputFormat format) noexcept {
    switch (format) {
        case InputFormat::Plain: return "plain";
        case InputFormat::Delimited: return "delimited";
        case InputFormat::Spectrum2Col: return "spectrum2col";
    }
    return "plain";
}

InputFormat parse_format(std::string_view text) {
    for (auto f : {InputFormat::Plain, InputFormat::Delimited, InputFormat::Spectrum2Col}) {
        if (to_string(f) == text) {
            return f;
        }
    }
    fail(ErrorCode::Usage, "unknown input format '" + std::string(text) + "'");
}

void InputSpec::validate() const {
    if (format != InputFormat::Delimited) {
        return;
    }
    if (column < 1) {
        fail(ErrorCode::Usage, "column index is 1-based");
    }
    const auto c = static_cast<unsigned char>(delimiter);
    if (!std::isprint(c) || std::isdigit(c) || delimiter == '+' || delimiter == '-' ||
        delimiter == '.') {
        fail(ErrorCode::Usage, std::string("unusable delimiter '") + delimiter + "'");
    }
}

double parse_numeral(std::string_view token) {
    if (!is_decimal_numeral(token)) {
        fail(ErrorCode::Parse, "not a decimal numeral: '" + std::string(token) + "'");
    }
    std::string_view body = token;
    if (body.front() == '+') {
        body.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec == std::errc::result_out_of_range) {
        // from_chars leaves the value untouched; strtod saturates to inf or
        // flushes toward zero, which is what the tally needs to see.
        const std::string copy(body);
        return std::strtod(copy.c_str(), nullptr);
    }
    if (ec != std::errc() || ptr != body.data() + body.size()) {
        fail(ErrorCode::Parse, "not a decimal numeral: '" + std::string(token) + "'");
    }
    return value;
}

namespace {

bool is_blank(char c) noexcept { return c == ' ' || c == '\t' || c == '\f' || c == '\v'; }

std::string_view trim(std::string_view s) noexcept {
    while (!s.empty() && is_blank(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && is_blank(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

template <typename IsSep>
std::vector<std::string_view> split_collapsing(std::string_view line, IsSep is_sep) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_sep(line[i])) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && !is_sep(line[i])) {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

std::vector<std::string_view> split_exact(std::string_view line, char delimiter) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delimiter, start);
        if (pos == std::string_view::npos) {
            out.push_back(trim(line.substr(start)));
            return out;
        }
        out.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
}

std::string printable(std::string_view field) {
    std::string out;
    for (const char c : field.substr(0, 40)) {
        out += std::isprint(static_cast<unsigned char>(c)) ? c : '?';
    }
    if (field.size() > 40) {
        out += "...";
    }
    return out;
}

class Parser {
public:
    explicit Parser(const InputSpec& spec) : spec_(spec) {}

    void line(std::string_view text, std::size_t number) {
        if (!text.empty() && text.back() == '\r') {
            text.remove_suffix(1);
        }
        const std::string_view body = trim(text);
        if (body.empty()) {
            return;
        }
        if (!spec_.comment_prefix.empty() && body.starts_with(spec_.comment_prefix)) {
            return;
        }
        switch (spec_.format) {
            case InputFormat::Plain: plain(body, number); break;
            case InputFormat::Delimited: delimited(body, number); break;
            case InputFormat::Spectrum2Col: spectrum(body, number); break;
        }
    }

    ParseResult finish() {
        if (spec_.format == InputFormat::Delimited && data_lines_ > 0 && lines_with_column_ == 0) {
            fail(ErrorCode::Structural, "no line has column " + std::to_string(spec_.column));
        }
        return std::move(result_);
    }

private:
    void field(std::string_view token, std::size_t number, std::size_t column) {
        if (!is_decimal_numeral(token)) {
            result_.diagnostics.push_back(
                {number, "field " + std::to_string(column) + " is not a number: '" +
                             printable(token) + "'"});
            return;
        }
        result_.records.push_back({parse_numeral(token), std::string(token), number, column});
    }

    void plain(std::string_view body, std::size_t number) {
        const auto tokens = split_collapsing(body, is_blank);
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (!spec_.comment_prefix.empty() && tokens[i].starts_with(spec_.comment_prefix)) {
                break;
            }
            field(tokens[i], number, i + 1);
        }
    }

    void delimited(std::string_view body, std::size_t number) {
        ++data_lines_;
        const auto fields = split_exact(body, spec_.delimiter);
        if (fields.size() < spec_.column) {
            result_.diagnostics.push_back(
                {number, "missing column " + std::to_string(spec_.column)});
            return;
        }
        ++lines_with_column_;
        field(fields[spec_.column - 1], number, spec_.column);
    }

    void spectrum(std::string_view body, std::size_t number) {
        const auto fields =
            split_collapsing(body, [](char c) { return is_blank(c) || c == ','; });
        if (fields.size() < 2) {
            result_.diagnostics.push_back({number, "expected two fields (wavenumber, absorbance)"});
            return;
        }
        field(fields[1], number, 2);
    }

    const InputSpec& spec_;
    ParseResult result_;
    std::size_t data_lines_ = 0;
    std::size_t lines_with_column_ = 0;
};

} // namespace

ParseResult parse_dataset(const InputSpec& spec, std::istream& in) {
    spec.validate();
    Parser parser(spec);
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
        parser.line(text, ++number);
    }
    if (in.bad()) {
        fail(ErrorCode::Io, "read failed after line " + std::to_string(number));
    }
    return parser.finish();
}

ParseResult parse_dataset(const InputSpec& spec, std::string_view text) {
    spec.validate();
    Parser parser(spec);
    std::size_t number = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        parser.line(text.substr(start, end - start), ++number);
        start = end + 1;
    }
    return parser.finish();
}

std::vector<Observation> to_observations(const ParseResult& parsed, bool keep_tokens) {
    std::vector<Observation> out;
    out.reserve(parsed.records.size());
    for (const auto& r : parsed.records) {
        out.push_back({r.value, keep_tokens ? std::optional<std::string>(r.token) : std::nullopt});
    }
    return out;
}

} // namespace digitlaw
