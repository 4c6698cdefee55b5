#include "digitlaw/empirical.hpp"

#include "digitlaw/error.hpp"

#include <cmath>

namespace digitlaw {

SampleSummary SampleSummary::empty(Base base, std::string source) {
    SampleSummary s;
    s.base = base;
    s.counts.assign(static_cast<std::size_t>(base.digit_count()), 0);
    s.source = std::move(source);
    return s;
}

std::uint64_t SampleSummary::count(int n) const {
    if (n < 1 || n >= base.value()) {
        fail(ErrorCode::Domain, "digit " + std::to_string(n) + " outside summary");
    }
    return counts[static_cast<std::size_t>(n - 1)];
}

void SampleSummary::merge(const SampleSummary& other) {
    if (!(other.base == base)) {
        fail(ErrorCode::Usage, "cannot merge summaries of different bases");
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
        counts[i] += other.counts[i];
    }
    total_read += other.total_read;
    used += other.used;
    skipped_zero += other.skipped_zero;
    skipped_nonfinite += other.skipped_nonfinite;
    if (source.empty()) {
        source = other.source;
    } else if (!other.source.empty()) {
        source += "+" + other.source;
    }
}

namespace {

void record(SampleSummary& s, const Digit& d) {
    ++s.counts[static_cast<std::size_t>(d.value() - 1)];
    ++s.used;
}

} // namespace

SampleSummary tally(std::span<const Observation> values, Base base, std::string source) {
    SampleSummary s = SampleSummary::empty(base, std::move(source));
    const bool use_tokens = base.value() == kDecimal;
    for (const Observation& obs : values) {
        ++s.total_read;
        if (!std::isfinite(obs.value)) {
            ++s.skipped_nonfinite;
            continue;
        }
        if (use_tokens && obs.token && is_decimal_numeral(*obs.token)) {
            if (const auto d = leading_digit_text(*obs.token)) {
                record(s, *d);
            } else {
                ++s.skipped_zero;
            }
            continue;
        }
        if (obs.value == 0.0) {
            ++s.skipped_zero;
            continue;
        }
        record(s, leading_digit_real(obs.value, base));
    }
    return s;
}

SampleSummary tally(std::span<const double> values, Base base, std::string source) {
    SampleSummary s = SampleSummary::empty(base, std::move(source));
    for (const double v : values) {
        ++s.total_read;
        if (!std::isfinite(v)) {
            ++s.skipped_nonfinite;
        } else if (v == 0.0) {
            ++s.skipped_zero;
        } else {
            record(s, leading_digit_real(v, base));
        }
    }
    return s;
}

DigitDistribution empirical_distribution(const SampleSummary& summary) {
    if (summary.used == 0) {
        fail(ErrorCode::EmptySample, "no leading digits were counted" +
                                         (summary.source.empty() ? std::string()
                                                                 : " in " + summary.source));
    }
    std::vector<double> probs;
    probs.reserve(summary.counts.size());
    for (const std::uint64_t c : summary.counts) {
        probs.push_back(static_cast<double>(c) / static_cast<double>(summary.used));
    }
    return {summary.base, std::move(probs), DistributionLabel::Empirical};
}

std::vector<Rational> empirical_rationals(const SampleSummary& summary) {
    if (summary.used == 0) {
        fail(ErrorCode::EmptySample, "no leading digits were counted");
    }
    std::vector<Rational> out;
    out.reserve(summary.counts.size());
    for (const std::uint64_t c : summary.counts) {
        out.emplace_back(c, summary.used);
    }
    return out;
}

} // namespace digitlaw
