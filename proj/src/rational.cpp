#include "digitlaw/rational.hpp"

#include "digitlaw/error.hpp"

#include <numeric>

namespace digitlaw {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const std::string& context) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        fail(ErrorCode::Capacity, "integer overflow in addition (" + context + ")");
    }
    return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const std::string& context) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        fail(ErrorCode::Capacity, "integer overflow in multiplication (" + context + ")");
    }
    return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exponent, const std::string& context) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        out = checked_mul(out, base, context);
    }
    return out;
}

Rational::Rational(std::uint64_t num, std::uint64_t den) {
    if (den == 0) {
        fail(ErrorCode::Domain, "rational with zero denominator");
    }
    const std::uint64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

double Rational::to_double() const noexcept {
    return static_cast<double>(to_long_double());
}

long double Rational::to_long_double() const noexcept {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
}

std::string Rational::str() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    __extension__ typedef unsigned __int128 wide;
    const wide lhs = static_cast<wide>(a.num_) * b.den_;
    const wide rhs = static_cast<wide>(b.num_) * a.den_;
    return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace digitlaw
