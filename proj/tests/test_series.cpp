#include <doctest.h>

#include <cmath>

#include "lamskel/enumerate.hpp"
#include "lamskel/series.hpp"
#include "test_oracles.hpp"

using namespace lamskel;

TEST_CASE("motzkin coefficients") {
    auto m = motzkin_coeffs(13);
    CHECK(m.at_exponent(0) == 0);
    const long long expected[] = {1, 1, 2, 4, 9};
    for (std::size_t e = 1; e <= 5; ++e) CHECK(m.at_exponent(e) == expected[e - 1]);
    CHECK(m.at_exponent(13) == 15511);
    CHECK(m.at_size(12) == 15511);  // gf offset: size s at exponent s+1
}

TEST_CASE("binary tree coefficients interleave Catalan numbers with zeros") {
    auto b = binary_coeffs(25);
    CHECK(b.at_exponent(1) == 1);
    CHECK(b.at_exponent(3) == 1);
    CHECK(b.at_exponent(7) == 5);
    for (std::size_t e = 0; e <= 25; e += 2) CHECK(b.at_exponent(e) == 0);
    for (std::size_t k = 0; 2 * k + 1 <= 25; ++k)
        CHECK(b.at_exponent(2 * k + 1) == testing::catalan_binomial(k));
}

TEST_CASE("closable coefficients match the Taylor expansion") {
    auto c = closable_coeffs(15);
    const long long expected[] = {1, 1, 2, 5, 11, 26, 65};
    for (std::size_t e = 2; e <= 8; ++e) CHECK(c.at_exponent(e) == expected[e - 2]);
    CHECK(c.at_exponent(15) == 55127);
}

TEST_CASE("uniquely closable coefficients match the Taylor expansion") {
    auto u = uniquely_closable_coeffs(8);
    const long long expected[] = {1, 0, 1, 1, 2, 2, 7};
    for (std::size_t e = 2; e <= 8; ++e) CHECK(u.at_exponent(e) == expected[e - 2]);
}

TEST_CASE("catalan numbers") {
    const long long expected[] = {1, 1, 2, 5, 14, 42};
    for (std::size_t k = 0; k <= 5; ++k) CHECK(catalan(k) == expected[k]);
    CHECK(catalan(8) == 1430);
    for (std::size_t k = 0; k <= 20; ++k) CHECK(catalan(k) == testing::catalan_binomial(k));
}

TEST_CASE("recurrences reproduce the convolution oracles exactly") {
    const std::size_t upto = 200;
    auto c_oracle = closable_coeffs(upto);
    auto u_oracle = uniquely_closable_coeffs(upto);
    auto c_rec = recurrence_advance(closable_recurrence(), upto);
    auto c_rec_long = recurrence_advance(closable_recurrence_long(), upto);
    auto u_rec = recurrence_advance(uniquely_closable_recurrence(), upto);
    for (std::size_t e = 0; e <= upto; ++e) {
        CHECK(c_rec.at_exponent(e) == c_oracle.at_exponent(e));
        CHECK(c_rec_long.at_exponent(e) == c_oracle.at_exponent(e));
        CHECK(u_rec.at_exponent(e) == u_oracle.at_exponent(e));
    }
    // spot values from the printed Taylor series
    CHECK(c_rec.at_exponent(6) == 11);
    CHECK(c_rec.at_exponent(13) == 7599);
    CHECK(c_rec.at_exponent(15) == 55127);
    CHECK(u_rec.at_exponent(8) == 7);  // n=0 step solves 72*u_8 = 504
}

TEST_CASE("recurrence_advance reports transcription bugs loudly") {
    RecurrenceSpec bad = uniquely_closable_recurrence();
    bad.poly[3][0] += 1;  // corrupt one coefficient
    CHECK_THROWS_WITH_AS(recurrence_advance(bad, 40),
                         doctest::Contains("non-exact division"), std::runtime_error);

    RecurrenceSpec zero_lead;
    zero_lead.name = "zero_lead";
    zero_lead.order = 1;
    zero_lead.poly = {{1}, {0, 1}};  // leading polynomial vanishes at n = 0
    zero_lead.initial = {1};
    CHECK_THROWS_WITH_AS(recurrence_advance(zero_lead, 5),
                         doctest::Contains("zero leading coefficient"), std::runtime_error);

    RecurrenceSpec inconsistent = uniquely_closable_recurrence();
    inconsistent.initial.pop_back();
    CHECK_THROWS_AS(recurrence_advance(inconsistent, 20), std::invalid_argument);
}

TEST_CASE("series agree with the enumerators") {
    auto m = motzkin_coeffs(15);
    auto c = closable_coeffs(15);
    for (std::uint32_t s = 0; s <= 14; ++s) {
        CHECK(m.at_size(s) == count_motzkin(s));
        CHECK(c.at_size(s) == count_closable(s));
    }
    auto u = uniquely_closable_coeffs(19);
    for (std::uint32_t s = 0; s <= 18; ++s)
        CHECK(u.at_size(s) == count_uniquely_closable_direct(s));
    // sum rule via the unclosable enumerator
    for (std::uint32_t s = 0; s <= 14; ++s)
        CHECK(m.at_size(s) == count_closable(s) + count_unclosable(s));
}

TEST_CASE("coefficients grow monotonically past exponent 3") {
    auto m = motzkin_coeffs(200);
    auto c = closable_coeffs(200);
    for (std::size_t e = 3; e < 200; ++e) {
        CHECK(m.at_exponent(e + 1) > m.at_exponent(e));
        CHECK(c.at_exponent(e + 1) > c.at_exponent(e));
    }
}

TEST_CASE("asymptotic estimates") {
    // the closable/motzkin ratio is 1/sqrt(5) at every index
    const double limit = 1.0 / std::sqrt(5.0);
    for (std::uint64_t n : {1ull, 10ull, 100ull, 500ull}) {
        double ratio = asymptotic_estimate(AsymptoticFamily::Closable, n) /
                       asymptotic_estimate(AsymptoticFamily::Motzkin, n);
        CHECK(std::abs(ratio - limit) < 1e-12);
    }

    auto exact = closable_coeffs(200);
    double estimate = asymptotic_estimate(AsymptoticFamily::Closable, 200);
    double rel = estimate / exact.at_exponent(200).convert_to<double>();
    CHECK(rel > 0.9);
    CHECK(rel < 1.1);

    for (std::uint64_t n : {1ull, 5ull, 50ull, 500ull})
        CHECK(asymptotic_estimate(AsymptoticFamily::UniquelyClosable, n) > 0.0);
    CHECK_THROWS_AS(asymptotic_estimate(AsymptoticFamily::Motzkin, 0), std::invalid_argument);
}
