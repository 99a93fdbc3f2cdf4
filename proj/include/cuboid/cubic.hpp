#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuboid/rational.hpp"

namespace cuboid {

/// Dense univariate polynomial with integer coefficients, lowest degree
/// first. The zero polynomial has no coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);

    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const BigInt& leading() const { return c_.back(); }
    const BigInt& operator[](std::size_t i) const { return c_[i]; }

    BigInt content() const;
    BigInt eval(const BigInt& x) const;
    Rational eval(const Rational& x) const;

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void trim();
    std::vector<BigInt> c_;
};

/// a3*y^3 + a2*y^2 + a1*y + a0 over the rationals, a3 != 0.
struct CubicPoly {
    Rational a3, a2, a1, a0;

    CubicPoly(Rational a3, Rational a2, Rational a1, Rational a0);
    /// y^3 - s1*y^2 + s2*y - s3, the monic cubic with the given elementary
    /// symmetric values of its roots.
    static CubicPoly from_symmetric(const Rational& s1, const Rational& s2, const Rational& s3);

    Rational eval(const Rational& y) const;
};

/// a2*y^2 + a1*y + a0 over the rationals, a2 != 0.
struct QuadraticPoly {
    Rational a2, a1, a0;

    QuadraticPoly(Rational a2, Rational a1, Rational a0);
};

class DegenerateQuadratic : public std::invalid_argument {
public:
    DegenerateQuadratic() : std::invalid_argument("quadratic with zero leading coefficient") {}
};

/// Clears denominators and removes content: the primitive integer
/// polynomial with positive leading coefficient, and the unit with
/// input = unit * primitive.
std::pair<Rational, IntPoly> primitive_part(const std::vector<Rational>& coeffs);

struct RootMultiplicity {
    Rational root;
    int multiplicity;

    friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct Factor {
    IntPoly poly;
    int multiplicity = 1;
    /// Set on a quadratic with no rational root and on a cubic with no
    /// rational root.
    bool irreducible = false;

    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Factorization over Q: input == unit * prod(factor.poly ^ multiplicity).
/// Factors are primitive with positive leading coefficient, sorted by
/// degree, then by coefficients from the constant term upward compared by
/// absolute value with negatives first.
struct FactorizationResult {
    Rational unit;
    std::vector<Factor> factors;
    std::vector<RootMultiplicity> rational_roots; // ascending

    bool splits_completely() const;
    /// Roots repeated by multiplicity, ascending.
    std::vector<Rational> root_list() const;
    /// unit * prod(factors), coefficients lowest degree first.
    std::vector<Rational> expand() const;
};

/// Factors a primitive integer polynomial of degree 1, 2 or 3.
FactorizationResult factor_over_q(const IntPoly& p);
FactorizationResult factor_over_q(const CubicPoly& p);
FactorizationResult factor_over_q(const QuadraticPoly& p);

std::vector<RootMultiplicity> rational_roots(const CubicPoly& p);

/// Distinct integer roots of a monic integer cubic, ascending. Uses exact
/// bisection on monotone stretches between the critical points.
std::vector<BigInt> integer_roots_monic_cubic(const BigInt& b2, const BigInt& b1, const BigInt& b0);

/// a1^2 - 4*a2*a0.
Rational discriminant(const QuadraticPoly& q);

/// Rational point on u^2 - v^2 = 2: u = (t^2+2)/(2t), v = (t^2-2)/(2t).
/// Throws DomainRestriction(ZeroParameter) for t = 0.
struct PellPoint {
    Rational u;
    Rational v;
};
PellPoint pell_like_param(const Rational& t);

/// Text such as "1/157216 (17 x+15)(9248 x^2+3128 x-495)". A unit of 1 is
/// omitted, -1 prints as a leading '-', a bare variable factor prints
/// without parentheses.
std::string format_factorization(const FactorizationResult& f, char var);
std::string format_poly(const IntPoly& p, char var);

} // namespace cuboid
