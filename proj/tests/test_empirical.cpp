#include <doctest.h>

#include "digitlaw/empirical.hpp"
#include "digitlaw/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace digitlaw;

namespace {

std::vector<double> range_values(std::uint64_t lo, std::uint64_t hi) {
    std::vector<double> out;
    for (std::uint64_t i = lo; i <= hi; ++i) {
        out.push_back(static_cast<double>(i));
    }
    return out;
}

} // namespace

TEST_CASE("tally examples") {
    const std::vector<double> values = {1.2, 0.004, -19.0, 0.0};
    const auto s = tally(values, Base(10));
    CHECK(s.count(1) == 2);
    CHECK(s.count(4) == 1);
    CHECK(s.used == 3);
    CHECK(s.skipped_zero == 1);
    CHECK(s.total_read == 4);

    const auto empty = tally(std::vector<double>{}, Base(10));
    CHECK(empty.total_read == 0);
    CHECK(empty.used == 0);
    CHECK(std::all_of(empty.counts.begin(), empty.counts.end(), [](auto c) { return c == 0; }));

    const auto table = tally(range_values(1, 1999), Base(10));
    CHECK(table.count(1) == leading_digit_count(Digit(1, Base(10)), 1999));
    CHECK(table.count(1) == 1111);
}

TEST_CASE("tally skips non-finite values") {
    const std::vector<double> values = {NAN, INFINITY, -INFINITY, 3.0};
    const auto s = tally(values, Base(10));
    CHECK(s.skipped_nonfinite == 3);
    CHECK(s.used == 1);
    CHECK(s.total_read == s.used + s.skipped_zero + s.skipped_nonfinite);
}

TEST_CASE("tally prefers the printed token in base 10") {
    // 0.3 - 0.1 is stored as 0.19999999999999998 but was printed as "0.2".
    const std::vector<Observation> obs = {{0.3 - 0.1, "0.2"},
                                          {0.3 - 0.1, std::nullopt},
                                          {0.0, "0.000"},
                                          {1e-320, "1e-320"}};
    const auto s = tally(obs, Base(10));
    CHECK(s.count(2) == 1);
    CHECK(s.count(1) == 2);
    CHECK(s.skipped_zero == 1);

    // Other bases ignore tokens.
    const auto b16 = tally(std::vector<Observation>{{255.0, "255"}}, Base(16));
    CHECK(b16.count(15) == 1);
}

TEST_CASE("tally is permutation, sign and radix-scale invariant") {
    std::mt19937_64 rng(4242);
    std::lognormal_distribution<double> draw(0.0, 3.0);
    std::vector<double> values(5000);
    for (double& v : values) {
        v = draw(rng);
    }
    for (const int b : {2, 10, 16}) {
        const Base base(b);
        const auto reference = tally(values, base);

        auto shuffled = values;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(tally(shuffled, base).counts == reference.counts);

        auto negated = values;
        for (double& v : negated) {
            v = -v;
        }
        CHECK(tally(negated, base).counts == reference.counts);

        if (b == 2) {
            auto scaled = values;
            for (double& v : scaled) {
                v = std::ldexp(v, 37);
            }
            CHECK(tally(scaled, base).counts == reference.counts);
        }
    }
}

TEST_CASE("summary merge is associative and commutative") {
    const auto a = tally(range_values(1, 50), Base(10), "a");
    const auto b = tally(range_values(300, 420), Base(10), "b");
    const auto c = tally(std::vector<double>{0.0, NAN, 7.0}, Base(10), "c");

    auto ab_c = a;
    ab_c.merge(b);
    ab_c.merge(c);
    auto bc = b;
    bc.merge(c);
    auto a_bc = a;
    a_bc.merge(bc);
    auto cba = c;
    cba.merge(b);
    cba.merge(a);

    for (const auto* s : {&a_bc, &cba}) {
        CHECK(s->counts == ab_c.counts);
        CHECK(s->used == ab_c.used);
        CHECK(s->total_read == ab_c.total_read);
        CHECK(s->skipped_zero == ab_c.skipped_zero);
        CHECK(s->skipped_nonfinite == ab_c.skipped_nonfinite);
    }
    CHECK(ab_c.source == "a+b+c");

    auto mixed = a;
    CHECK_THROWS_AS(mixed.merge(tally(range_values(1, 3), Base(8))), Error);
}

TEST_CASE("empirical_distribution examples") {
    const auto s19 = tally(range_values(1, 19), Base(10));
    const auto d19 = empirical_distribution(s19);
    CHECK(d19.label() == DistributionLabel::Empirical);
    CHECK(d19[1] == doctest::Approx(11.0 / 19));
    CHECK(empirical_rationals(s19)[0].str() == "11/19");

    const auto fives = tally(std::vector<double>{1, 10, 100, 1000, 10000}, Base(10));
    const auto d5 = empirical_distribution(fives);
    CHECK(d5[1] == 1.0);
    for (int n = 2; n <= 9; ++n) {
        CHECK(d5[n] == 0.0);
    }

    const auto big = tally(range_values(1, 100'000), Base(10));
    const auto rationals = empirical_rationals(big);
    for (int n = 1; n <= 9; ++n) {
        CHECK(rationals[static_cast<std::size_t>(n - 1)] == exact_frequency(Digit(n, Base(10)), 100'000));
    }
}

TEST_CASE("empirical rationals sum to exactly one") {
    const auto s = tally(range_values(17, 4321), Base(10));
    const auto r = empirical_rationals(s);
    std::uint64_t num = 0;
    for (const auto& c : s.counts) {
        num += c;
    }
    CHECK(num == s.used);
    // Fractions share the denominator `used` before reduction.
    std::uint64_t rebuilt = 0;
    for (const auto& q : r) {
        rebuilt += q.num() * (s.used / q.den());
    }
    CHECK(rebuilt == s.used);
}

TEST_CASE("empty sample has no distribution") {
    const auto s = tally(std::vector<double>{0.0, 0.0}, Base(10));
    try {
        empirical_distribution(s);
        FAIL("expected empty-sample error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptySample);
    }
    CHECK_THROWS_AS(empirical_rationals(s), Error);
}
