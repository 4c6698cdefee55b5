#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace digitlaw {

// Overflow-checked unsigned arithmetic. On overflow these throw
// Error(Capacity) carrying `context` so the caller's (n, k, m, N) shows up
// in the message.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const std::string& context);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const std::string& context);
std::uint64_t checked_pow(std::uint64_t base, unsigned exponent, const std::string& context);

/// Non-negative exact fraction, always held in lowest terms with den > 0.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::uint64_t num, std::uint64_t den);

    [[nodiscard]] std::uint64_t num() const noexcept { return num_; }
    [[nodiscard]] std::uint64_t den() const noexcept { return den_; }
    [[nodiscard]] double to_double() const noexcept;
    [[nodiscard]] long double to_long_double() const noexcept;

    /// "p/q", or "p" when q == 1.
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace digitlaw
