#include "digitlaw/lawtheory.hpp"

#include "digitlaw/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace digitlaw {

std::string_view to_string(DistributionLabel label) noexcept {
    switch (label) {
        case DistributionLabel::Benford: return "benford";
        case DistributionLabel::Arith: return "arith";
        case DistributionLabel::Geom: return "geom";
        case DistributionLabel::Empirical: return "empirical";
        case DistributionLabel::Custom: return "custom";
    }
    return "custom";
}

DistributionLabel parse_label(std::string_view text) {
    for (auto label : {DistributionLabel::Benford, DistributionLabel::Arith, DistributionLabel::Geom,
                       DistributionLabel::Empirical, DistributionLabel::Custom}) {
        if (to_string(label) == text) {
            return label;
        }
    }
    fail(ErrorCode::Usage, "unknown distribution '" + std::string(text) + "'");
}

std::string_view to_string(Extremum kind) noexcept {
    return kind == Extremum::Min ? "min" : "max";
}

DigitDistribution::DigitDistribution(Base base, std::vector<double> probabilities,
                                     DistributionLabel label)
    : base_(base), probs_(std::move(probabilities)), label_(label) {
    if (probs_.size() != static_cast<std::size_t>(base_.digit_count())) {
        fail(ErrorCode::Usage, "base " + std::to_string(base_.value()) + " needs " +
                                   std::to_string(base_.digit_count()) + " probabilities, got " +
                                   std::to_string(probs_.size()));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        const double p = probs_[i];
        if (!(p >= 0.0 && p <= 1.0)) {
            fail(ErrorCode::Domain, "P(" + std::to_string(i + 1) + ") is outside [0, 1]");
        }
        sum += p;
    }
    if (std::fabs(sum - 1.0) > kSumTolerance) {
        fail(ErrorCode::Domain, "probabilities sum to " + std::to_string(sum) + ", not 1");
    }
}

double DigitDistribution::operator[](int n) const {
    if (n < 1 || n >= base_.value()) {
        fail(ErrorCode::Domain, "digit " + std::to_string(n) + " outside distribution");
    }
    return probs_[static_cast<std::size_t>(n - 1)];
}

bool BoundsReport::all_within() const noexcept {
    return std::all_of(entries.begin(), entries.end(), [](const BoundEntry& e) { return e.within; });
}

namespace {

std::vector<double> normalized(std::vector<double> weights) {
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    for (double& w : weights) {
        w /= total;
    }
    return weights;
}

std::string context(const Digit& n, unsigned k, std::uint64_t m = 0) {
    std::string out = "n=" + std::to_string(n.value()) + ", k=" + std::to_string(k);
    if (m != 0) {
        out += ", m=" + std::to_string(m);
    }
    return out + ", N=" + std::to_string(n.base().value());
}

void require_k(unsigned k) {
    if (k == 0) {
        fail(ErrorCode::Domain, "extremum index k starts at 1");
    }
}

} // namespace

DigitDistribution benford(Base base) {
    const double log_base = std::log(static_cast<double>(base.value()));
    std::vector<double> probs;
    probs.reserve(static_cast<std::size_t>(base.digit_count()));
    for (int n = 1; n < base.value(); ++n) {
        probs.push_back(std::log1p(1.0 / n) / log_base);
    }
    return {base, std::move(probs), DistributionLabel::Benford};
}

DigitDistribution arithmetic_mean_distribution(Base base) {
    const double radix = base.value();
    std::vector<double> weights;
    for (int n = 1; n < base.value(); ++n) {
        weights.push_back(radix / (n + 1) + 1.0 / n);
    }
    return {base, normalized(std::move(weights)), DistributionLabel::Arith};
}

DigitDistribution geometric_mean_distribution(Base base) {
    std::vector<double> weights;
    for (int n = 1; n < base.value(); ++n) {
        weights.push_back(1.0 / std::sqrt(static_cast<double>(n) * (n + 1)));
    }
    return {base, normalized(std::move(weights)), DistributionLabel::Geom};
}

DigitDistribution theoretical_distribution(DistributionLabel label, Base base) {
    switch (label) {
        case DistributionLabel::Benford: return benford(base);
        case DistributionLabel::Arith: return arithmetic_mean_distribution(base);
        case DistributionLabel::Geom: return geometric_mean_distribution(base);
        default: break;
    }
    fail(ErrorCode::Usage, "'" + std::string(to_string(label)) + "' is not a theoretical law");
}

Rational extremal_value_series(Digit n, unsigned k, Extremum kind) {
    require_k(k);
    const std::string ctx = context(n, k);
    const std::uint64_t radix = static_cast<std::uint64_t>(n.base().value());
    const std::uint64_t digit = static_cast<std::uint64_t>(n.value());

    // repunit = N^{k-1} + ... + N + 1, power = N^k
    std::uint64_t repunit = 0;
    std::uint64_t power = 1;
    for (unsigned j = 0; j < k; ++j) {
        repunit = checked_add(repunit, power, ctx);
        power = checked_mul(power, radix, ctx);
    }
    const std::uint64_t nines = checked_mul(radix - 1, repunit, ctx);
    if (kind == Extremum::Min) {
        const std::uint64_t den = checked_add(checked_mul(digit - 1, power, ctx), nines, ctx);
        return {repunit, den};
    }
    const std::uint64_t num = checked_add(power, repunit, ctx);
    const std::uint64_t den = checked_add(checked_mul(digit, power, ctx), nines, ctx);
    return {num, den};
}

Rational extremal_value_closed(Digit n, unsigned k, Extremum kind) {
    require_k(k);
    const std::string ctx = context(n, k);
    const std::uint64_t radix = static_cast<std::uint64_t>(n.base().value());
    const std::uint64_t digit = static_cast<std::uint64_t>(n.value());
    const std::uint64_t power = checked_pow(radix, k, ctx);

    if (kind == Extremum::Min) {
        const std::uint64_t den = checked_mul(radix - 1, checked_mul(digit, power, ctx) - 1, ctx);
        return {power - 1, den};
    }
    const std::uint64_t num = checked_mul(power, radix, ctx) - 1;
    const std::uint64_t den = checked_mul(radix - 1, checked_mul(digit + 1, power, ctx) - 1, ctx);
    return {num, den};
}

ExtremalFrequency extremal_frequency(Digit n, unsigned k, Extremum kind) {
    const Rational series = extremal_value_series(n, k, kind);
    const Rational closed = extremal_value_closed(n, k, kind);
    if (series != closed) {
        throw std::logic_error("extremal forms disagree (" + context(n, k) + "): " + series.str() +
                               " vs " + closed.str());
    }
    const std::string ctx = context(n, k);
    const std::uint64_t power = checked_pow(static_cast<std::uint64_t>(n.base().value()), k, ctx);
    const std::uint64_t lead =
        static_cast<std::uint64_t>(kind == Extremum::Min ? n.value() : n.value() + 1);
    return {n, k, kind, closed, checked_mul(lead, power, ctx) - 1};
}

Rational limit_frequency(Digit n, Extremum kind) {
    const std::uint64_t radix = static_cast<std::uint64_t>(n.base().value());
    const std::uint64_t digit = static_cast<std::uint64_t>(n.value());
    if (kind == Extremum::Min) {
        return {1, (radix - 1) * digit};
    }
    return {radix, (radix - 1) * (digit + 1)};
}

std::uint64_t leading_digit_count(Digit n, std::uint64_t m) {
    if (m == 0) {
        fail(ErrorCode::Domain, "leading_digit_count requires m >= 1");
    }
    const std::uint64_t radix = static_cast<std::uint64_t>(n.base().value());
    const std::uint64_t digit = static_cast<std::uint64_t>(n.value());
    std::uint64_t count = 0;
    std::uint64_t power = 1;
    while (true) {
        std::uint64_t lo = 0;
        if (__builtin_mul_overflow(digit, power, &lo) || lo > m) {
            break;
        }
        std::uint64_t next = 0;
        const bool partial = __builtin_mul_overflow(digit + 1, power, &next) || next - 1 > m;
        count += partial ? m - lo + 1 : power;
        if (partial || __builtin_mul_overflow(power, radix, &power)) {
            break;
        }
    }
    return count;
}

Rational exact_frequency(Digit n, std::uint64_t m) {
    return {leading_digit_count(n, m), m};
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> extremum_locations(Digit n, unsigned k_max) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    if (n.base().value() == 2) {
        return out;
    }
    const std::uint64_t radix = static_cast<std::uint64_t>(n.base().value());
    const std::uint64_t digit = static_cast<std::uint64_t>(n.value());
    std::uint64_t power = 1;
    for (unsigned k = 1; k <= k_max; ++k) {
        const std::string ctx = context(n, k);
        power = checked_mul(power, radix, ctx);
        out.emplace_back(checked_mul(digit, power, ctx) - 1, checked_mul(digit + 1, power, ctx) - 1);
    }
    return out;
}

BoundsReport bounds_check(const DigitDistribution& dist) {
    BoundsReport report{dist.base(), {}};
    constexpr long double slack = DigitDistribution::kSumTolerance;
    for (int n = 1; n < dist.base().value(); ++n) {
        const Digit digit(n, dist.base());
        const Rational lower = limit_frequency(digit, Extremum::Min);
        const Rational upper = limit_frequency(digit, Extremum::Max);
        const double p = dist[n];
        const long double lp = p;
        const bool within =
            lp >= lower.to_long_double() - slack && lp <= upper.to_long_double() + slack;
        report.entries.push_back({digit, lower, p, upper, within});
    }
    return report;
}

} // namespace digitlaw
