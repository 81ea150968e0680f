#include <catch2/catch_amalgamated.hpp>

#include <vrmorse/rational.hpp>

using vrmorse::Rational;

TEST_CASE("rationals normalize on construction", "[rational]") {
    REQUIRE(Rational(2, 4) == Rational(1, 2));
    REQUIRE(Rational(-3, -6) == Rational(1, 2));
    REQUIRE(Rational(3, -6) == Rational(-1, 2));
    REQUIRE(Rational(0, 7) == Rational(0));
    REQUIRE_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic and ordering", "[rational]") {
    Rational a(1, 3), b(1, 6);
    REQUIRE(a + b == Rational(1, 2));
    REQUIRE(a - b == Rational(1, 6));
    REQUIRE(a * b == Rational(1, 18));
    REQUIRE(a / b == Rational(2));
    REQUIRE(-a == Rational(-1, 3));
    REQUIRE_THROWS_AS(a / Rational(0), std::domain_error);

    REQUIRE(b < a);
    REQUIRE(a <= a);
    REQUIRE(Rational(-1, 2) < Rational(1, 3));
    REQUIRE(Rational(7, 3) > Rational(2));
}

TEST_CASE("rational overflow throws instead of wrapping", "[rational]") {
    Rational big(INT64_MAX);
    REQUIRE_THROWS_AS(big + big, std::overflow_error);
    REQUIRE_THROWS_AS(big * Rational(2), std::overflow_error);
    // intermediates above 64 bits are fine when the result reduces:
    // the common denominator here is ~1.6e19 before cancellation
    REQUIRE(Rational(1, 4000000019) + Rational(2, 4000000019) ==
            Rational(3, 4000000019));
}

TEST_CASE("rational formatting and parsing", "[rational]") {
    REQUIRE(Rational(1, 2).str() == "1/2");
    REQUIRE(Rational(5).str() == "5");
    REQUIRE(Rational(-1, 2).str() == "-1/2");

    REQUIRE(Rational::parse("3/12") == Rational(1, 4));
    REQUIRE(Rational::parse("7") == Rational(7));
    REQUIRE_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);

    REQUIRE(Rational::parse_decimal("0.25") == Rational(1, 4));
    REQUIRE(Rational::parse_decimal("-0.125") == Rational(-1, 8));
    REQUIRE(Rational::parse_decimal("2.50") == Rational(5, 2));
    REQUIRE(Rational::parse_decimal("-0.5") == Rational(-1, 2));
    REQUIRE(Rational::parse_decimal("10") == Rational(10));
    REQUIRE_THROWS_AS(Rational::parse_decimal("1e3"), std::invalid_argument);
}
