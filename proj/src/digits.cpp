#include "digitlaw/digits.hpp"

#include "digitlaw/error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace digitlaw {

Base::Base(int value) : value_(value) {
    if (value < kMin || value > kMax) {
        fail(ErrorCode::Domain, "base must lie in [2, 36], got " + std::to_string(value));
    }
}

Digit::Digit(int value, Base base) : value_(value), base_(base) {
    if (value < 1 || value >= base.value()) {
        fail(ErrorCode::Domain, "leading digit " + std::to_string(value) +
                                    " is outside [1, " + std::to_string(base.value() - 1) + "]");
    }
}

char digit_symbol(int value) noexcept {
    return value < 10 ? static_cast<char>('0' + value) : static_cast<char>('A' + value - 10);
}

char Digit::symbol() const noexcept { return digit_symbol(value_); }

Digit leading_digit_int(std::int64_t m, Base base) {
    if (m <= 0) {
        fail(ErrorCode::Domain, "leading_digit_int requires m >= 1, got " + std::to_string(m));
    }
    const auto radix = static_cast<std::int64_t>(base.value());
    while (m >= radix) {
        m /= radix;
    }
    return Digit(static_cast<int>(m), base);
}

Digit leading_digit_real(double x, Base base) {
    if (x == 0.0 || !std::isfinite(x)) {
        fail(ErrorCode::Domain, "leading_digit_real requires a finite nonzero value");
    }
    // Extended precision keeps the rounding drift of a few hundred scaling
    // steps far below one double ulp.
    const long double radix = base.value();
    long double s = std::fabs(static_cast<long double>(x));
    while (s >= radix) {
        s /= radix;
    }
    while (s < 1.0L) {
        s *= radix;
    }
    const double top = static_cast<double>(base.value());
    const double ulp = top - std::nextafter(top, 0.0);
    if (s >= static_cast<long double>(top) - 4.0L * ulp) {
        return Digit(1, base);
    }
    return Digit(static_cast<int>(s), base);
}

namespace {

bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

// Significand span of a validated numeral: [begin, end) without sign/exponent.
struct Significand {
    std::size_t begin = 0;
    std::size_t end = 0;
};

std::optional<Significand> scan_numeral(std::string_view t) noexcept {
    std::size_t i = 0;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) {
        ++i;
    }
    const std::size_t begin = i;
    std::size_t digits = 0;
    while (i < t.size() && is_digit(t[i])) {
        ++i;
        ++digits;
    }
    if (i < t.size() && t[i] == '.') {
        ++i;
        while (i < t.size() && is_digit(t[i])) {
            ++i;
            ++digits;
        }
    }
    if (digits == 0) {
        return std::nullopt;
    }
    const std::size_t end = i;
    if (i < t.size() && (t[i] == 'e' || t[i] == 'E')) {
        ++i;
        if (i < t.size() && (t[i] == '+' || t[i] == '-')) {
            ++i;
        }
        std::size_t exp_digits = 0;
        while (i < t.size() && is_digit(t[i])) {
            ++i;
            ++exp_digits;
        }
        if (exp_digits == 0) {
            return std::nullopt;
        }
    }
    if (i != t.size()) {
        return std::nullopt;
    }
    return Significand{begin, end};
}

} // namespace

bool is_decimal_numeral(std::string_view token) noexcept {
    return scan_numeral(token).has_value();
}

std::optional<Digit> leading_digit_text(std::string_view token) {
    const auto sig = scan_numeral(token);
    if (!sig) {
        fail(ErrorCode::Parse, "not a decimal numeral: '" + std::string(token) + "'");
    }
    for (std::size_t i = sig->begin; i < sig->end; ++i) {
        const char c = token[i];
        if (c >= '1' && c <= '9') {
            return Digit(c - '0', Base(kDecimal));
        }
    }
    return std::nullopt;
}

} // namespace digitlaw
