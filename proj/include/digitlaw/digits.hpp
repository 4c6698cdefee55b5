#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace digitlaw {

/// Radix of a positional numeral system, 2..36.
class Base {
public:
    static constexpr int kMin = 2;
    static constexpr int kMax = 36;

    explicit Base(int value);

    [[nodiscard]] constexpr int value() const noexcept { return value_; }
    /// Number of admissible leading digits (1..N-1).
    [[nodiscard]] constexpr int digit_count() const noexcept { return value_ - 1; }

    friend constexpr bool operator==(Base, Base) = default;

private:
    int value_;
};

inline constexpr int kDecimal = 10;

/// A leading digit: never zero, always below its base.
class Digit {
public:
    Digit(int value, Base base);

    [[nodiscard]] constexpr int value() const noexcept { return value_; }
    [[nodiscard]] Base base() const noexcept { return base_; }
    /// '1'..'9' then 'A'..'Z'.
    [[nodiscard]] char symbol() const noexcept;

    friend bool operator==(Digit, Digit) = default;

private:
    int value_;
    Base base_;
};

char digit_symbol(int value) noexcept;

/// Most significant digit of m in the given base. Integer arithmetic only.
/// Throws Error(Domain) for m <= 0.
Digit leading_digit_int(std::int64_t m, Base base);

/// Leading digit of |x| in the given base. |x| is scaled into [1, base) by
/// repeated multiply/divide; a scaled value within 4 ulp below the base is
/// treated as a carry into the next power (digit 1). Throws Error(Domain) for
/// zero, NaN and infinities.
Digit leading_digit_real(double x, Base base);

/// True when `token` matches: [+-]? digits [. digits]? ([eE] [+-]? digits)?
/// with at least one digit in the significand (".5" and "5." are accepted).
bool is_decimal_numeral(std::string_view token) noexcept;

/// First nonzero significand digit of a decimal numeral, scanning left to
/// right. Sign, exponent and leading zeros do not matter. Returns nullopt for
/// all-zero tokens such as "0.000"; throws Error(Parse) when the token is not
/// a decimal numeral (the empty string included).
std::optional<Digit> leading_digit_text(std::string_view token);

} // namespace digitlaw
