#include <catch2/catch_amalgamated.hpp>

#include "cuboid/coefficients.hpp"
#include "cuboid/cubic.hpp"
#include "cuboid/errors.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace cuboid;
using cuboid::testing::q;

namespace {

CubicPoly cubic(long a3, long a2, long a1, long a0) { return CubicPoly(a3, a2, a1, a0); }

std::vector<Rational> coeffs_low_first(const CubicPoly& p) { return {p.a0, p.a1, p.a2, p.a3}; }

} // namespace

TEST_CASE("rational roots of small examples")
{
    CHECK(rational_roots(cubic(1, -1, 0, 0)) == std::vector<RootMultiplicity>{{q(0), 2}, {q(1), 1}});
    CHECK(rational_roots(cubic(1, 0, 0, -2)).empty());
    CHECK(rational_roots(cubic(1, 0, -1, 0)) == std::vector<RootMultiplicity>{{q(-1), 1}, {q(0), 1}, {q(1), 1}});
    CHECK(rational_roots(cubic(8, -12, 6, -1)) == std::vector<RootMultiplicity>{{q(1, 2), 3}});
    CHECK(rational_roots(CubicPoly(q(1, 3), q(-1, 2), q(0), q(1, 6))) ==
          std::vector<RootMultiplicity>{{q(-1, 2), 1}, {q(1), 2}});
    CHECK_THROWS(CubicPoly(q(0), q(1), q(1), q(1)));
}

TEST_CASE("diagonal cubic at the sporadic point has the single root -8/17")
{
    const CoefficientSet cs = coefficients_at({q(14, 5), q(-7, 2)});
    CHECK(rational_roots(CubicPoly::from_symmetric(cs.e01, cs.e02, cs.e03)) ==
          std::vector<RootMultiplicity>{{q(-8, 17), 1}});
}

TEST_CASE("rational roots match divisor enumeration on random integer cubics")
{
    auto g = cuboid::testing::rng(30);
    for (int i = 0; i < 1000; ++i) {
        long a3 = 0;
        while (a3 == 0)
            a3 = cuboid::testing::uniform(g, -50, 50);
        const long a2 = cuboid::testing::uniform(g, -50, 50);
        const long a1 = cuboid::testing::uniform(g, -50, 50);
        const long a0 = cuboid::testing::uniform(g, -50, 50);
        INFO(a3 << " " << a2 << " " << a1 << " " << a0);
        CHECK(rational_roots(cubic(a3, a2, a1, a0)) == cuboid::testing::brute_force_roots(a3, a2, a1, a0));
    }
}

TEST_CASE("rational roots match divisor enumeration on products with known roots")
{
    auto g = cuboid::testing::rng(31);
    for (int i = 0; i < 500; ++i) {
        // (p1 y - q1)(a y^2 + b y + c) with small entries.
        const long p1 = cuboid::testing::uniform(g, 1, 6), q1 = cuboid::testing::uniform(g, -6, 6);
        long a = 0;
        while (a == 0)
            a = cuboid::testing::uniform(g, -5, 5);
        const long b = cuboid::testing::uniform(g, -8, 8), c = cuboid::testing::uniform(g, -8, 8);
        const long a3 = p1 * a, a2 = p1 * b - q1 * a, a1 = p1 * c - q1 * b, a0 = -q1 * c;
        INFO(a3 << " " << a2 << " " << a1 << " " << a0);
        const auto roots = rational_roots(cubic(a3, a2, a1, a0));
        CHECK(roots == cuboid::testing::brute_force_roots(a3, a2, a1, a0));
        CHECK(std::any_of(roots.begin(), roots.end(), [&](const auto& r) { return r.root == q(q1, p1); }));
    }
}

TEST_CASE("monic integer cubic roots with large coefficients")
{
    // Roots 10^12, -3, 7.
    const BigInt big("1000000000000");
    const BigInt s1 = big + 4, s2 = big * 4 - 21, s3 = -big * 21;
    CHECK(integer_roots_monic_cubic(-s1, s2, -s3) == std::vector<BigInt>{-3, 7, big});
    CHECK(integer_roots_monic_cubic(0, 0, -2).empty());
    CHECK(integer_roots_monic_cubic(-3, 3, -1) == std::vector<BigInt>{1});
}

TEST_CASE("factorization expands back to the input")
{
    auto g = cuboid::testing::rng(32);
    for (int i = 0; i < 400; ++i) {
        const CubicPoly p(cuboid::testing::random_nonzero(g, 30), cuboid::testing::random_rational(g, 30),
                          cuboid::testing::random_rational(g, 30), cuboid::testing::random_rational(g, 30));
        const FactorizationResult f = factor_over_q(p);
        CHECK(f.expand() == coeffs_low_first(p));
        int total = 0;
        for (const Factor& fac : f.factors) {
            CHECK(fac.poly.leading() > 0);
            CHECK(fac.poly.content() == 1);
            total += fac.poly.degree() * fac.multiplicity;
            if (fac.poly.degree() >= 2)
                CHECK(fac.irreducible);
        }
        CHECK(total == 3);
        CHECK(std::is_sorted(f.rational_roots.begin(), f.rational_roots.end(),
                             [](const auto& a, const auto& b) { return a.root < b.root; }));
    }
}

TEST_CASE("printed factorizations")
{
    const CoefficientSet cs = coefficients_at({q(14, 5), q(-7, 2)});
    const auto fx = factor_over_q(CubicPoly::from_symmetric(cs.e10, cs.e20, cs.e30));
    const auto fd = factor_over_q(CubicPoly::from_symmetric(cs.e01, cs.e02, cs.e03));
    CHECK(format_factorization(fx, 'x') == "1/157216 (17 x+15)(9248 x^2+3128 x-495)");
    CHECK(format_factorization(fd, 'd') == "1/157216 (17 d+8)(9248 d^2-952 d-8175)");
    REQUIRE(fx.factors.size() == 2);
    CHECK(!fx.factors[0].irreducible);
    CHECK(fx.factors[1].irreducible);
    CHECK(!fx.splits_completely());

    CHECK(format_factorization(factor_over_q(cubic(1, -1, 0, 0)), 'x') == "x^2 (x-1)");
    const auto f = factor_over_q(cubic(1, 0, -1, 0));
    CHECK(format_factorization(f, 'd') == "d (d-1)(d+1)");
    CHECK(f.root_list() == std::vector<Rational>{q(-1), q(0), q(1)});
    CHECK(format_factorization(factor_over_q(cubic(-2, 0, 0, 4)), 'x') == "-2 (x^3-2)");
    CHECK(factor_over_q(cubic(1, 0, 0, -2)).factors.at(0).irreducible);
    CHECK(format_poly(IntPoly({BigInt(-495), BigInt(3128), BigInt(9248)}), 'x') == "9248 x^2+3128 x-495");
}

TEST_CASE("quadratic discriminants")
{
    // The c = 0 edge quadratic 2(1+b)^2 y^2 + 2b(1+b) y - (1+2b) at b = -1/2.
    const Rational b = q(-1, 2);
    const QuadraticPoly quad(2 * (1 + b) * (1 + b), 2 * b * (1 + b), -(1 + 2 * b));
    CHECK(discriminant(quad) == 4 * (b * b + 4 * b + 2) * (1 + b) * (1 + b));
    CHECK(discriminant(quad) == q(1, 4));
    // The c = 1 quadratic at b = 0.
    CHECK(discriminant(QuadraticPoly(2, -2, 0)) == q(4));
    CHECK_THROWS_AS(QuadraticPoly(0, 1, 1), DegenerateQuadratic);

    const auto split = factor_over_q(QuadraticPoly(6, -5, 1));
    CHECK(split.root_list() == std::vector<Rational>{q(1, 3), q(1, 2)});
    CHECK(factor_over_q(QuadraticPoly(1, 0, -2)).factors.at(0).irreducible);
}

TEST_CASE("pell-like parametrization")
{
    CHECK(pell_like_param(q(1)).u == q(3, 2));
    CHECK(pell_like_param(q(1)).v == q(-1, 2));
    CHECK(pell_like_param(q(2)).u == q(3, 2));
    CHECK(pell_like_param(q(2)).v == q(1, 2));
    CHECK_THROWS_AS(pell_like_param(q(0)), DomainRestriction);
    auto g = cuboid::testing::rng(33);
    for (int i = 0; i < 100; ++i) {
        const Rational t = cuboid::testing::random_nonzero(g, 100);
        const PellPoint p = pell_like_param(t);
        CHECK(p.u * p.u - p.v * p.v == q(2));
        CHECK(p.u - 2 == (t * t - 4 * t + 2) / (2 * t));
    }
}
