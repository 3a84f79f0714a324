#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torusq/phase.hpp"
#include "torusq/rational.hpp"

using namespace torusq;

TEST_CASE("normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(1, 3) == Rational(-1, 3));
    CHECK(Rational(7).is_integer());
    CHECK_FALSE(Rational(7, 2).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("ordering and floor") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(6, 2).floor() == 3);
}

TEST_CASE("mod reductions land in the canonical windows") {
    CHECK(mod_one(Rational(9, 4)) == Rational(1, 4));
    CHECK(mod_one(Rational(-1, 4)) == Rational(3, 4));
    CHECK(mod_two(Rational(9, 4)) == Rational(1, 4));
    CHECK(mod_two(Rational(-1, 4)) == Rational(7, 4));
    CHECK(mod_two(Rational(-13, 3)) == Rational(5, 3));
    for (long long n = -40; n <= 40; ++n) {
        Rational q(n, 7);
        Rational m = mod_two(q);
        CHECK(Rational(0) <= m);
        CHECK(m < Rational(2));
        CHECK(((q - m) * Rational(1, 2)).is_integer());
    }
}

TEST_CASE("quarter-integer phases are exact") {
    CHECK(phase_pi(Rational(0)) == Complex(1, 0));
    CHECK(phase_pi(Rational(1)) == Complex(-1, 0));
    CHECK(phase_pi(Rational(1, 2)) == Complex(0, 1));
    CHECK(phase_pi(Rational(-1, 2)) == Complex(0, -1));
    CHECK(phase_pi(Rational(5, 1)) == Complex(-1, 0));
    CHECK(phase_2pi(Rational(1, 4)) == Complex(0, 1));
}

TEST_CASE("phases multiply by adding exponents mod 2") {
    RationalPhase a(Rational(7, 5));
    RationalPhase b(Rational(4, 5));
    CHECK((a * b).exponent() == Rational(1, 5));
    CHECK(a.conj().exponent() == Rational(3, 5));
    CHECK(a.pow(5).exponent() == Rational(1));
    double err = std::abs(phase_pi(Rational(1, 3)) - Complex(0.5, std::sqrt(3.0) / 2));
    CHECK(err < 1e-15);
}

TEST_CASE("overflow is detected, not wrapped") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}
