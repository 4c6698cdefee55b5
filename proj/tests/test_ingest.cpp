#include <doctest.h>

#include "digitlaw/error.hpp"
#include "digitlaw/ingest.hpp"

#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

using namespace digitlaw;
using namespace std::string_literals;

namespace {

std::vector<double> values_of(const ParseResult& r) {
    std::vector<double> out;
    for (const auto& rec : r.records) {
        out.push_back(rec.value);
    }
    return out;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected digitlaw::Error");
    return ErrorCode::Usage;
}

} // namespace

TEST_CASE("spectrum2col takes the absorbance column") {
    InputSpec spec;
    spec.format = InputFormat::Spectrum2Col;
    const auto r = parse_dataset(spec, std::string_view("400.0 0.123\n401.0 0.456"));
    CHECK(values_of(r) == std::vector<double>{0.123, 0.456});
    CHECK(r.diagnostics.empty());
    CHECK(r.records[1].line == 2);
    CHECK(r.records[1].column_index == 2);
    CHECK(r.records[1].token == "0.456");

    const auto mixed = parse_dataset(
        spec, std::string_view("# header\r\nwavenumber absorbance\r\n402.5,\t0.789, flag\r\n403\n\n"));
    CHECK(values_of(mixed) == std::vector<double>{0.789});
    REQUIRE(mixed.diagnostics.size() == 2);
    CHECK(mixed.diagnostics[0].line == 2);
    CHECK(mixed.diagnostics[1].line == 4);
}

TEST_CASE("plain reads every numeral and stops at an inline comment") {
    InputSpec spec;
    const auto r = parse_dataset(spec, std::string_view("1 2 3 # trailing comment"));
    CHECK(values_of(r) == std::vector<double>{1, 2, 3});
    CHECK(r.diagnostics.empty());

    const auto multi =
        parse_dataset(spec, std::string_view("  # full comment\n-4.5e2\t+.25  abc 7.\n\n0"));
    CHECK(values_of(multi) == std::vector<double>{-450.0, 0.25, 7.0, 0.0});
    REQUIRE(multi.diagnostics.size() == 1);
    CHECK(multi.diagnostics[0].line == 2);
    CHECK(multi.records[2].column_index == 4);
}

TEST_CASE("delimited selects one column and reports bad rows") {
    InputSpec spec;
    spec.format = InputFormat::Delimited;
    spec.column = 2;
    const auto r = parse_dataset(spec, std::string_view("id,amount\nA,19\nB,x\nC,0.00456"));
    CHECK(values_of(r) == std::vector<double>{19, 0.00456});
    REQUIRE(r.diagnostics.size() == 2);
    CHECK(r.diagnostics[0].line == 1);
    CHECK(r.diagnostics[1].line == 3);

    spec.delimiter = ';';
    spec.column = 3;
    const auto semi = parse_dataset(spec, std::string_view("a; b ; 12 \nc;d\n;;-0.5;"));
    CHECK(values_of(semi) == std::vector<double>{12, -0.5});
    REQUIRE(semi.diagnostics.size() == 1);
    CHECK(semi.diagnostics[0].line == 2);
}

TEST_CASE("delimited input without the column anywhere is a structural error") {
    InputSpec spec;
    spec.format = InputFormat::Delimited;
    spec.column = 4;
    CHECK(code_of([&] { parse_dataset(spec, std::string_view("1,2\n3,4\n")); }) == ErrorCode::Structural);
    // No data lines at all is not structural.
    CHECK(parse_dataset(spec, std::string_view("# nothing\n\n")).records.empty());
}

TEST_CASE("input spec validation") {
    InputSpec spec;
    spec.format = InputFormat::Delimited;
    for (const char bad : {'5', '+', '-', '.', '\x01'}) {
        spec.delimiter = bad;
        CHECK(code_of([&] { spec.validate(); }) == ErrorCode::Usage);
    }
    spec.delimiter = '\t';
    CHECK(code_of([&] { spec.validate(); }) == ErrorCode::Usage);
    spec.delimiter = '|';
    spec.column = 0;
    CHECK(code_of([&] { spec.validate(); }) == ErrorCode::Usage);
    CHECK(parse_format("spectrum2col") == InputFormat::Spectrum2Col);
    CHECK(code_of([] { parse_format("jcamp"); }) == ErrorCode::Usage);
}

TEST_CASE("stream and string parsing agree") {
    const std::string text = "# c\n1 2\r\n3e2 x\n\n-0.004";
    InputSpec spec;
    std::istringstream stream(text);
    const auto a = parse_dataset(spec, stream);
    const auto b = parse_dataset(spec, std::string_view(text));
    CHECK(values_of(a) == values_of(b));
    CHECK(a.diagnostics.size() == b.diagnostics.size());
}

TEST_CASE("a stream that goes bad is an I/O error") {
    std::istringstream stream("1 2 3");
    stream.setstate(std::ios::badbit);
    CHECK(code_of([&] { parse_dataset(InputSpec{}, stream); }) == ErrorCode::Io);
}

TEST_CASE("parse_numeral handles range limits") {
    CHECK(parse_numeral("+1.5") == 1.5);
    CHECK(std::isinf(parse_numeral("1e999")));
    CHECK(parse_numeral("-1e-999") == 0.0);
    CHECK(code_of([] { parse_numeral("1,5"); }) == ErrorCode::Parse);
}

TEST_CASE("parsed tokens reparse to their values and keep the printed digit") {
    std::mt19937_64 rng(321);
    std::uniform_real_distribution<double> mant(-10.0, 10.0);
    std::uniform_int_distribution<int> ex(-30, 30);
    std::string text;
    for (int i = 0; i < 5000; ++i) {
        char buf[64];
        const double x = mant(rng) * std::pow(10.0, ex(rng));
        const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 9);
        text.append(buf, res.ptr);
        text += (i % 7 == 0) ? '\n' : ' ';
    }
    const auto parsed = parse_dataset(InputSpec{}, std::string_view(text));
    CHECK(parsed.diagnostics.empty());
    CHECK(parsed.records.size() == 5000);
    for (const auto& rec : parsed.records) {
        CHECK(parse_numeral(rec.token) == rec.value);
        if (rec.value != 0.0) {
            CHECK(leading_digit_text(rec.token)->value() == leading_digit_real(rec.value, Base(10)).value());
        }
    }
}

TEST_CASE("parsing is deterministic and never crashes on arbitrary bytes") {
    std::mt19937_64 rng(77);
    const std::string alphabet = "0123456789+-.eE,; \t\r\n#xA\x00\xff"s;
    for (int trial = 0; trial < 300; ++trial) {
        std::string bytes;
        const std::size_t len = rng() % 400;
        for (std::size_t i = 0; i < len; ++i) {
            bytes += (rng() % 4 == 0) ? static_cast<char>(rng() % 256) : alphabet[rng() % alphabet.size()];
        }
        for (const auto format : {InputFormat::Plain, InputFormat::Delimited, InputFormat::Spectrum2Col}) {
            InputSpec spec;
            spec.format = format;
            spec.column = 1 + rng() % 3;
            ParseResult first;
            ParseResult second;
            try {
                first = parse_dataset(spec, std::string_view(bytes));
                second = parse_dataset(spec, std::string_view(bytes));
            } catch (const Error& e) {
                CHECK(e.code() == ErrorCode::Structural);
                continue;
            }
            REQUIRE(values_of(first).size() == values_of(second).size());
            for (std::size_t i = 0; i < first.records.size(); ++i) {
                CHECK(first.records[i].token == second.records[i].token);
                CHECK(is_decimal_numeral(first.records[i].token));
            }
            CHECK(first.diagnostics.size() == second.diagnostics.size());
        }
    }
}

TEST_CASE("observations carry tokens only when asked") {
    const auto parsed = parse_dataset(InputSpec{}, std::string_view("0.20 5"));
    const auto with = to_observations(parsed, true);
    const auto without = to_observations(parsed, false);
    REQUIRE(with.size() == 2);
    CHECK(with[0].token == "0.20");
    CHECK_FALSE(without[0].token.has_value());
}
