#include "doctest.h"

#include "odo/rational.hpp"

using odo::Rat;

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rat(26, 5) == Rat(52, 10));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK(Rat(3, 4) + Rat(1, 4) == Rat(1));
    CHECK(Rat(15, 4) * Rat(2) == Rat(15, 2));
    CHECK(Rat(7) / Rat(2) == Rat(7, 2));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("floor is toward negative infinity") {
    CHECK(Rat(7, 2).floor() == 3);
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(6, 3).floor() == 2);
    CHECK(Rat(-6, 3).floor() == -2);
    CHECK(Rat(0).floor() == 0);
}

TEST_CASE("round half up") {
    // The values the reference run depends on.
    CHECK((Rat(1) * Rat(15, 4)).round_half_up() == 4);   // 3.75
    CHECK((Rat(2) * Rat(15, 4)).round_half_up() == 8);   // 7.5
    CHECK((Rat(3) * Rat(15, 4)).round_half_up() == 11);  // 11.25
    CHECK((Rat(6) * Rat(15, 4)).round_half_up() == 23);  // 22.5
    CHECK((Rat(7) * Rat(15, 4)).round_half_up() == 26);  // 26.25
    // Ties go toward positive infinity on both sides of zero.
    CHECK(Rat(1, 2).round_half_up() == 1);
    CHECK(Rat(-1, 2).round_half_up() == 0);
    CHECK(Rat(-3, 2).round_half_up() == -1);
}

TEST_CASE("overflow raises instead of wrapping") {
    const Rat big(INT64_MAX, 1);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}
