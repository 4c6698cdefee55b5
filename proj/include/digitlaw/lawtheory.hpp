#pragma once

#include "digitlaw/digits.hpp"
#include "digitlaw/rational.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace digitlaw {

enum class DistributionLabel { Benford, Arith, Geom, Empirical, Custom };

std::string_view to_string(DistributionLabel label) noexcept;
/// Accepts "benford", "arith", "geom", "empirical", "custom".
DistributionLabel parse_label(std::string_view text);

/// First-digit probabilities P(1..N-1) for one base.
///
/// Construction enforces that every entry lies in [0, 1] and that the entries
/// sum to 1 within kSumTolerance. Index 0 holds P(1).
class DigitDistribution {
public:
    static constexpr double kSumTolerance = 1e-12;

    DigitDistribution(Base base, std::vector<double> probabilities, DistributionLabel label);

    [[nodiscard]] Base base() const noexcept { return base_; }
    [[nodiscard]] DistributionLabel label() const noexcept { return label_; }
    [[nodiscard]] std::span<const double> probabilities() const noexcept { return probs_; }
    /// P(n) for n in 1..N-1.
    [[nodiscard]] double operator[](int n) const;
    [[nodiscard]] std::size_t size() const noexcept { return probs_.size(); }

private:
    Base base_;
    std::vector<double> probs_;
    DistributionLabel label_;
};

enum class Extremum { Min, Max };

std::string_view to_string(Extremum kind) noexcept;

/// A successive minimum or maximum of the frequency of integers in {1..m}
/// that begin with digit n. The k-th minimum sits at m = n*N^k - 1 and the
/// k-th maximum at m = (n+1)*N^k - 1.
struct ExtremalFrequency {
    Digit n;
    unsigned k;
    Extremum kind;
    Rational value;
    std::uint64_t location_m;
};

struct BoundEntry {
    Digit n;
    Rational lower; // 1/((N-1)n)
    double p;
    Rational upper; // N/((N-1)(n+1))
    bool within;
};

struct BoundsReport {
    Base base;
    std::vector<BoundEntry> entries;

    [[nodiscard]] bool all_within() const noexcept;
};

/// P(n) = log_N(1 + 1/n).
DigitDistribution benford(Base base);

/// P(n) proportional to N/(n+1) + 1/n, the normalized sum of the two limit
/// frequencies.
DigitDistribution arithmetic_mean_distribution(Base base);

/// P(n) proportional to 1/sqrt(n(n+1)), the normalized geometric mean of the
/// two limit frequencies.
DigitDistribution geometric_mean_distribution(Base base);

/// Builds one of the three theoretical laws by label.
DigitDistribution theoretical_distribution(DistributionLabel label, Base base);

/// Extremal value from the geometric-series sums written out term by term:
///   min: (N^{k-1} + ... + 1) / ((n-1)N^k + (N-1)(N^{k-1} + ... + 1))
///   max: (N^k + ... + 1)     / (n N^k     + (N-1)(N^{k-1} + ... + 1))
Rational extremal_value_series(Digit n, unsigned k, Extremum kind);

/// Closed form of the same value:
///   min: (N^k - 1)     / ((N-1)(n N^k - 1))
///   max: (N^{k+1} - 1) / ((N-1)((n+1) N^k - 1))
Rational extremal_value_closed(Digit n, unsigned k, Extremum kind);

/// Evaluates both forms and insists they agree. Throws Error(Domain) for
/// k == 0 and Error(Capacity) once N^k no longer fits in 64 bits.
ExtremalFrequency extremal_frequency(Digit n, unsigned k, Extremum kind);

/// k -> infinity: min 1/((N-1)n), max N/((N-1)(n+1)).
Rational limit_frequency(Digit n, Extremum kind);

/// Number of integers in [1, m] whose leading digit is n, by summing the runs
/// [n N^j, (n+1) N^j - 1]. Throws Error(Domain) for m == 0.
std::uint64_t leading_digit_count(Digit n, std::uint64_t m);

/// leading_digit_count(n, m) / m.
Rational exact_frequency(Digit n, std::uint64_t m);

/// (m_min, m_max) for k = 1..k_max. Empty for base 2, where every integer
/// begins with 1 and the frequency never moves.
std::vector<std::pair<std::uint64_t, std::uint64_t>> extremum_locations(Digit n, unsigned k_max);

/// Screens P(n) against 1/((N-1)n) <= P(n) <= N/((N-1)(n+1)). Comparisons
/// allow kSumTolerance of slack so values that land exactly on a bound (the
/// uniform law on n = 1, base 2) count as inside.
BoundsReport bounds_check(const DigitDistribution& dist);

} // namespace digitlaw
