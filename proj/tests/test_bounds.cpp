#include <catch2/catch_amalgamated.hpp>

#include "qstr/bounds.hpp"

using qstr::BigInt;

TEST_CASE("lower bound pieces") {
    CHECK(qstr::lower_bound(1) == 3);
    CHECK(qstr::lower_bound(2) == 6);
    CHECK(qstr::lower_bound(3) == 11);
    CHECK(qstr::lower_bound(4) == 21);
    CHECK(qstr::lower_bound(5) == 40);
    CHECK(qstr::lower_bound(6) == 76);      // 2^6 + 4*6 - 12
    CHECK(qstr::lower_bound(9) == 512 + 24);
    CHECK(qstr::lower_bound(10) == 1053);   // 2^10 + floor(100/4) + 4
    CHECK(qstr::lower_bound(12) == 4096 + 36 + 4);
    CHECK_THROWS_AS(qstr::lower_bound(0), std::invalid_argument);
}

TEST_CASE("prior upper bound") {
    CHECK(qstr::upper_bound_prior(5) == 41);
    CHECK(qstr::upper_bound_prior(8) == 321);
    CHECK(qstr::upper_bound_prior(13) == 10241);
    CHECK_THROWS_AS(qstr::upper_bound_prior(2), std::invalid_argument);
}

TEST_CASE("recurrence upper bound") {
    CHECK(qstr::upper_bound_recurrence(3) == 11);
    CHECK(qstr::upper_bound_recurrence(4) == 21);
    CHECK(qstr::upper_bound_recurrence(5) == 40);
    CHECK(qstr::upper_bound_recurrence(6) == 78);  // 21 + 48 + C(3,2) + C(4,2)
    CHECK(qstr::upper_bound_recurrence(7) == 152); // 40 + 96 + C(4,2) + C(5,3)
    CHECK(qstr::upper_bound_recurrence(13) == 9181);
    CHECK_THROWS_AS(qstr::upper_bound_recurrence(2), std::invalid_argument);
}

TEST_CASE("stepping the recurrence from n=3 happens to reproduce 40") {
    CHECK(BigInt(11) + 3 * qstr::pow2(3) + qstr::binomial(2, 1) + qstr::binomial(3, 2) == 40);
}

TEST_CASE("closed-form upper bound") {
    CHECK(qstr::upper_bound_closed(14) == 18460);
    CHECK(qstr::upper_bound_closed(16) == 73756);
    CHECK_THROWS_AS(qstr::upper_bound_closed(13), std::invalid_argument);
    for (int n = 14; n <= 64; ++n) {
        CHECK(qstr::upper_bound_closed(n) == qstr::pow2(n) + qstr::pow2(n - 3) + 28);
        CHECK(qstr::upper_bound_prior(n) - qstr::upper_bound_closed(n) == qstr::pow2(n - 3) - 27);
        CHECK(qstr::upper_bound_recurrence(n) <= qstr::upper_bound_closed(n));
    }
}

TEST_CASE("comparison table matches the published nine rows") {
    auto rows = qstr::comparison_table(5, 13);
    REQUIRE(rows.size() == 9);
    const std::pair<std::uint64_t, std::uint64_t> expect[] = {
        {41, 40},     {81, 78},     {161, 152},   {321, 300},  {641, 591},
        {1281, 1173}, {2561, 2323}, {5121, 4623}, {10241, 9181}};
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(rows[k].n == static_cast<int>(k) + 5);
        CHECK(rows[k].upper_prior == expect[k].first);
        CHECK(rows[k].upper_recurrence == expect[k].second);
        CHECK_FALSE(rows[k].upper_closed.has_value());
        CHECK(rows[k].lower <= rows[k].upper_recurrence);
        CHECK(rows[k].upper_recurrence <= rows[k].upper_prior);
    }

    auto single = qstr::comparison_table(5, 5);
    REQUIRE(single.size() == 1);
    CHECK(single[0].upper_prior == 41);
    CHECK(single[0].upper_recurrence == 40);

    auto closed = qstr::comparison_table(14, 14);
    REQUIRE(closed.size() == 1);
    REQUIRE(closed[0].upper_closed.has_value());
    CHECK(*closed[0].upper_closed == 18460);

    CHECK_THROWS_AS(qstr::comparison_table(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(qstr::comparison_table(6, 5), std::invalid_argument);
}

TEST_CASE("row invariants hold out to n = 64") {
    for (const auto& row : qstr::comparison_table(5, 64)) {
        CHECK(row.lower <= row.upper_recurrence);
        CHECK(row.upper_recurrence <= row.upper_prior);
        if (row.upper_closed) CHECK(row.upper_recurrence <= *row.upper_closed);
    }
}

TEST_CASE("central binomial inequalities") {
    auto checks = qstr::central_binomial_checks(200);
    REQUIRE(checks.size() == 200);
    for (const auto& c : checks) {
        CHECK(c.holds_wallis); // holds for every k >= 1
        if (c.k >= 6) CHECK(c.holds_power4);
    }
    // boundary behaviour of the power-of-4 form, recorded but not asserted
    // as a rule below k = 6
    CHECK(checks[3].k == 4);
    CHECK_FALSE(checks[3].holds_power4); // C(8,4)=70 > 64
    CHECK(checks[4].k == 5);
    CHECK(checks[4].holds_power4);       // C(10,5)=252 < 256 already
    CHECK(checks[5].k == 6);
    CHECK(checks[5].holds_power4);       // C(12,6)=924 < 1024
    CHECK_THROWS_AS(qstr::central_binomial_checks(0), std::invalid_argument);
}

TEST_CASE("sharper central-binomial constants, informational") {
    // tighter variants with larger starting points; no bound is derived from
    // them, they are only reported to hold on the tested range
    for (int k = 21; k <= 200; ++k)
        CHECK(8 * qstr::binomial(2 * k, k) < qstr::pow2(2 * k));
    for (int k = 82; k <= 200; ++k)
        CHECK(16 * qstr::binomial(2 * k, k) < qstr::pow2(2 * k));
}
