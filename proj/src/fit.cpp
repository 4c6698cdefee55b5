#include "digitlaw/fit.hpp"

#include "digitlaw/error.hpp"

#include <algorithm>
#include <cmath>

namespace digitlaw {

namespace {

void require_same_base(const DigitDistribution& a, const DigitDistribution& b) {
    if (!(a.base() == b.base())) {
        fail(ErrorCode::Usage, "distributions have different bases (" +
                                   std::to_string(a.base().value()) + " vs " +
                                   std::to_string(b.base().value()) + ")");
    }
}

} // namespace

double pearson_r(const DigitDistribution& emp, const DigitDistribution& theo) {
    require_same_base(emp, theo);
    if (emp.base().value() == 2) {
        fail(ErrorCode::DegenerateBase, "correlation over a single digit is undefined");
    }
    const auto x = emp.probabilities();
    const auto y = theo.probabilities();
    const double count = static_cast<double>(x.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= count;
    mean_y /= count;

    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    // Rounding leaves ~1e-34 of residue on a constant vector of probabilities.
    constexpr double kZeroVariance = 1e-28;
    if (sxx <= kZeroVariance || syy <= kZeroVariance) {
        fail(ErrorCode::UndefinedCorrelation, "one of the distributions is constant");
    }
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

ChiSquare chi_square(const SampleSummary& summary, const DigitDistribution& theo) {
    if (!(summary.base == theo.base())) {
        fail(ErrorCode::Usage, "sample and distribution have different bases");
    }
    if (summary.used == 0) {
        fail(ErrorCode::EmptySample, "chi-square needs at least one counted digit");
    }
    const double used = static_cast<double>(summary.used);
    double stat = 0.0;
    for (int n = 1; n < theo.base().value(); ++n) {
        const double expected = used * theo[n];
        if (!(expected > 0.0)) {
            fail(ErrorCode::DegenerateExpectation,
                 "expected count for digit " + std::to_string(n) + " is zero");
        }
        const double diff = static_cast<double>(summary.count(n)) - expected;
        stat += diff * diff / expected;
    }
    return {stat, theo.base().value() - 2};
}

Deviation deviation(const DigitDistribution& emp, const DigitDistribution& theo) {
    require_same_base(emp, theo);
    Deviation out;
    double total = 0.0;
    for (int n = 1; n < emp.base().value(); ++n) {
        const double d = std::fabs(emp[n] - theo[n]);
        total += d;
        if (d > out.max_abs_dev) {
            out.max_abs_dev = d;
            out.argmax = n;
        }
    }
    out.mad = total / emp.base().digit_count();
    return out;
}

double mad(const DigitDistribution& emp, const DigitDistribution& theo) {
    return deviation(emp, theo).mad;
}

FitReport compare(const SampleSummary& summary, std::span<const DigitDistribution> candidates) {
    if (candidates.empty()) {
        fail(ErrorCode::Usage, "no candidate distributions to compare against");
    }
    const DigitDistribution emp = empirical_distribution(summary);
    for (const auto& c : candidates) {
        if (!(c.base() == summary.base)) {
            fail(ErrorCode::Usage, "candidate '" + std::string(to_string(c.label())) +
                                       "' is not in base " + std::to_string(summary.base.value()));
        }
    }

    FitReport report{summary.base, summary, {}, bounds_check(emp), {}};
    for (const auto& c : candidates) {
        FitEntry entry;
        entry.label = std::string(to_string(c.label()));
        try {
            entry.r = pearson_r(emp, c);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::UndefinedCorrelation && e.code() != ErrorCode::DegenerateBase) {
                throw;
            }
        }
        try {
            entry.chi = chi_square(summary, c);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::DegenerateExpectation) {
                throw;
            }
        }
        const Deviation dev = deviation(emp, c);
        entry.mad = dev.mad;
        entry.max_abs_dev = dev.max_abs_dev;
        report.entries.push_back(std::move(entry));
    }

    // Strict comparisons keep the earliest candidate on a full tie.
    const auto better = [](const FitEntry& a, const FitEntry& b) {
        if (a.r.has_value() != b.r.has_value()) {
            return a.r.has_value();
        }
        if (a.r && *a.r != *b.r) {
            return *a.r > *b.r;
        }
        return a.mad < b.mad;
    };
    const FitEntry* best = &report.entries.front();
    for (const auto& e : report.entries) {
        if (better(e, *best)) {
            best = &e;
        }
    }
    report.best_by_r = best->label;
    return report;
}

} // namespace digitlaw
