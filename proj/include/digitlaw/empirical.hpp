#pragma once

#include "digitlaw/digits.hpp"
#include "digitlaw/lawtheory.hpp"
#include "digitlaw/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace digitlaw {

/// One datum to tally: the parsed value and, when it came from text, the
/// printed token it was parsed from.
struct Observation {
    double value = 0.0;
    std::optional<std::string> token;
};

/// Leading-digit counts of one dataset plus what was left out and why.
/// counts[i] is the count for digit i + 1.
struct SampleSummary {
    Base base{kDecimal};
    std::vector<std::uint64_t> counts;
    std::uint64_t total_read = 0;
    std::uint64_t used = 0;
    std::uint64_t skipped_zero = 0;
    std::uint64_t skipped_nonfinite = 0;
    std::string source;

    /// All-zero summary for `base`.
    static SampleSummary empty(Base base, std::string source = {});

    [[nodiscard]] std::uint64_t count(int n) const;

    /// Adds another summary of the same base (associative and commutative on
    /// the counters; sources are joined with '+').
    void merge(const SampleSummary& other);
};

/// Tallies leading digits. In base 10 a present token decides the digit;
/// otherwise the value is used. Zeros and non-finite values are counted as
/// skipped, never as digits.
SampleSummary tally(std::span<const Observation> values, Base base, std::string source = {});

/// Convenience overload for bare values (numeric extraction only).
SampleSummary tally(std::span<const double> values, Base base, std::string source = {});

/// counts / used. Throws Error(EmptySample) when used == 0.
DigitDistribution empirical_distribution(const SampleSummary& summary);

/// counts / used as exact fractions in lowest terms.
std::vector<Rational> empirical_rationals(const SampleSummary& summary);

} // namespace digitlaw
