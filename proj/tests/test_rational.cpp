#include <catch2/catch_amalgamated.hpp>

#include <unordered_set>

#include "cuboid/errors.hpp"
#include "cuboid/rational.hpp"
#include "support.hpp"

using namespace cuboid;
using cuboid::testing::q;

TEST_CASE("construction normalizes to lowest terms with positive denominator")
{
    const Rational r(BigInt(6), BigInt(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(BigInt(0), BigInt(-7)).den() == 1);
    CHECK(q(2, 4) == q(1, 2));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), ZeroDenominator);
}

TEST_CASE("parse accepts ascii p/q forms")
{
    CHECK(Rational::parse("14/5") == q(14, 5));
    CHECK(Rational::parse("-7/2") == q(-7, 2));
    CHECK(Rational::parse("6/4") == q(3, 2));
    CHECK(Rational::parse("0") == q(0));
    CHECK(Rational::parse("123456789012345678901234567890").num() == BigInt("123456789012345678901234567890"));
}

TEST_CASE("parse rejects malformed input")
{
    for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", " 1", "1 ", "+1", "--1", "1/-2", "a", "1/2/3",
                            "\xe2\x88\x92" "7/2"}) {
        INFO(bad);
        CHECK_THROWS(Rational::parse(bad));
    }
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
}

TEST_CASE("to_string round-trips through parse")
{
    auto g = cuboid::testing::rng(1);
    for (int i = 0; i < 500; ++i) {
        const Rational r = cuboid::testing::random_rational(g, 1000);
        CHECK(Rational::parse(r.to_string()) == r);
    }
    CHECK(q(3).to_string() == "3");
    CHECK(q(-3, 4).to_string() == "-3/4");
}

TEST_CASE("field axioms on random values")
{
    auto g = cuboid::testing::rng(2);
    for (int i = 0; i < 300; ++i) {
        const Rational a = cuboid::testing::random_rational(g, 60);
        const Rational b = cuboid::testing::random_rational(g, 60);
        const Rational c = cuboid::testing::random_nonzero(g, 60);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a / c) * c == a);
        CHECK(a - a == q(0));
        CHECK(c * c.inverse() == q(1));
        CHECK((a < b) == (a.num() * b.den() < b.num() * a.den()));
    }
    CHECK_THROWS_AS(q(1) / q(0), ZeroDenominator);
    CHECK_THROWS_AS(q(0).inverse(), ZeroDenominator);
}

TEST_CASE("pow, abs, height")
{
    CHECK(q(2, 3).pow(3) == q(8, 27));
    CHECK(q(2, 3).pow(-2) == q(9, 4));
    CHECK(q(5).pow(0) == q(1));
    CHECK(q(-7, 2).abs() == q(7, 2));
    CHECK(q(14, 5).height() == 14);
    CHECK(q(-7, 2).height() == 7);
    CHECK(q(1, 16).height() == 16);
    CHECK(q(0).height() == 1);
}

TEST_CASE("integer and rational square roots")
{
    CHECK(isqrt(BigInt(0)) == 0);
    CHECK(isqrt(BigInt(99)) == 9);
    CHECK(isqrt(BigInt(100)) == 10);
    CHECK_THROWS(isqrt(BigInt(-1)));
    auto g = cuboid::testing::rng(3);
    for (int i = 0; i < 300; ++i) {
        const BigInt n = cuboid::testing::uniform(g, 0, 1L << 40);
        const BigInt r = isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
        CHECK(exact_isqrt(n * n).value() == n);
        CHECK(exact_isqrt(n * n + 2 * n + 2) == std::nullopt);
    }
    CHECK(is_rational_square(q(9, 4)).value() == q(3, 2));
    CHECK(is_rational_square(q(0)).value() == q(0));
    CHECK(!is_rational_square(q(2)));
    CHECK(!is_rational_square(q(-4)));
    CHECK(!is_rational_square(q(4, 3)));
}

TEST_CASE("floor and ceil division")
{
    CHECK(floor_div(BigInt(7), BigInt(2)) == 3);
    CHECK(floor_div(BigInt(-7), BigInt(2)) == -4);
    CHECK(ceil_div(BigInt(-7), BigInt(2)) == -3);
    CHECK(ceil_div(BigInt(7), BigInt(-2)) == -3);
}

TEST_CASE("equal values hash equally")
{
    std::unordered_set<Rational, RationalHash> s;
    s.insert(q(2, 4));
    s.insert(q(1, 2));
    s.insert(q(-1, 2));
    CHECK(s.size() == 2);
}
