#pragma once

#include "digitlaw/empirical.hpp"
#include "digitlaw/lawtheory.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace digitlaw {

/// Sample Pearson correlation over the N-1 paired probabilities.
/// Throws Error(DegenerateBase) in base 2, Error(UndefinedCorrelation) when
/// either side has zero variance, Error(Usage) on base mismatch.
double pearson_r(const DigitDistribution& emp, const DigitDistribution& theo);

struct ChiSquare {
    double statistic = 0.0;
    int dof = 0; // N - 2
};

/// Pearson chi-square of the observed counts against used * theo(n).
ChiSquare chi_square(const SampleSummary& summary, const DigitDistribution& theo);

struct Deviation {
    double mad = 0.0;         // mean |emp(n) - theo(n)|
    double max_abs_dev = 0.0; // max  |emp(n) - theo(n)|
    int argmax = 1;           // digit where max_abs_dev occurs (first on ties)
};

Deviation deviation(const DigitDistribution& emp, const DigitDistribution& theo);
double mad(const DigitDistribution& emp, const DigitDistribution& theo);

struct FitEntry {
    std::string label;
    std::optional<double> r;      // empty when the correlation is undefined
    std::optional<ChiSquare> chi; // empty when an expected cell is zero
    double mad = 0.0;
    double max_abs_dev = 0.0;
};

struct FitReport {
    Base base{kDecimal};
    SampleSummary sample;
    std::vector<FitEntry> entries;
    BoundsReport bounds; // of the empirical distribution
    std::string best_by_r;
};

/// Scores the sample against every candidate. best_by_r is the candidate with
/// the largest r; ties go to the smaller mad, then to the earlier candidate.
/// Candidates whose r is undefined rank below all defined ones.
FitReport compare(const SampleSummary& summary, std::span<const DigitDistribution> candidates);

} // namespace digitlaw
