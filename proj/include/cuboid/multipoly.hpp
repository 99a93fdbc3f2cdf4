#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cuboid/rational.hpp"

namespace cuboid {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// the first variable most significant.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

using Assignment = std::map<std::string, Rational, std::less<>>;

/// Sparse multivariate polynomial over the rationals. Terms are kept in
/// graded lexicographic order and no stored coefficient is ever zero.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars);

    static MultiPoly constant(std::vector<std::string> vars, const Rational& value);
    static MultiPoly variable(std::vector<std::string> vars, std::string_view name);

    /// Parses a sum of monomials such as "b^2*c^4-6*b^2*c^3+c-1/2". Every
    /// identifier must be one of `vars`; parentheses are not supported.
    static MultiPoly parse(std::string_view text, std::vector<std::string> vars);

    const std::vector<std::string>& vars() const noexcept { return vars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    unsigned total_degree() const;
    unsigned degree_in(std::size_t var) const;
    std::size_t var_index(std::string_view name) const;

    /// Greatest term under graded lexicographic order. Requires !is_zero().
    const std::pair<const Exponents, Rational>& leading() const;
    Rational coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const Rational& coeff);

    /// Throws MissingAssignment if a variable has no value.
    Rational eval(const Assignment& point) const;

    /// Replaces one variable by a value. The variable list is unchanged.
    MultiPoly substitute(std::string_view name, const Rational& value) const;

    /// Coefficients as polynomials in the remaining variables, indexed by the
    /// power of `name`.
    std::vector<MultiPoly> coefficients_in(std::string_view name) const;

    MultiPoly pow(unsigned exponent) const;
    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& k);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& k) { return a *= k; }
    friend MultiPoly operator*(const Rational& k, MultiPoly a) { return a *= k; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    std::string to_string() const;

private:
    void adopt_vars(const MultiPoly& o);

    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Exact quotient a / d when d divides a, otherwise nullopt.
std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& d);

/// Evaluates the polynomial with coefficients scaled to integers and the
/// point's denominators cleared, so the inner loop runs on integers only.
class CompiledPoly {
public:
    CompiledPoly() = default;
    explicit CompiledPoly(const MultiPoly& p);

    /// `values[i]` is the value of variable i.
    Rational eval(std::span<const Rational> values) const;

private:
    struct Term {
        std::vector<unsigned> exps;
        BigInt coeff;
    };
    std::vector<Term> terms_;
    std::vector<unsigned> max_deg_;
    Rational scale_{1};
};

/// Quotient of two polynomials. Not reduced by a polynomial gcd; the pair is
/// scaled to joint integer content 1 with positive denominator leading
/// coefficient.
class RationalFunction {
public:
    RationalFunction() : RationalFunction(MultiPoly::constant({}, 0)) {}
    explicit RationalFunction(MultiPoly num);
    /// Throws ZeroDenominator if `den` is the zero polynomial.
    RationalFunction(MultiPoly num, MultiPoly den);

    const MultiPoly& num() const noexcept { return num_; }
    const MultiPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    /// Throws ZeroDenominator if the denominator vanishes at the point.
    Rational eval(const Assignment& point) const;
    RationalFunction substitute(std::string_view name, const Rational& value) const;

    RationalFunction pow(int exponent) const;
    RationalFunction operator-() const;

    friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g);
    friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g);
    friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g);
    friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g);
    friend RationalFunction operator*(const Rational& k, const RationalFunction& f);

    std::string to_string() const;

private:
    void normalize();

    MultiPoly num_;
    MultiPoly den_;
};

/// f == g as rational functions: f.num * g.den == g.num * f.den.
bool ratfun_equal(const RationalFunction& f, const RationalFunction& g);

/// Structural evaluation, kept free of any clearing of denominators.
Rational poly_eval(const MultiPoly& p, const Assignment& point);

} // namespace cuboid
