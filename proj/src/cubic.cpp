#include "cuboid/cubic.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cuboid {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

BigInt IntPoly::content() const
{
    BigInt g = 0;
    for (const auto& a : c_)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    return g;
}

BigInt IntPoly::eval(const BigInt& x) const
{
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Rational IntPoly::eval(const Rational& x) const
{
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + Rational(*it);
    return acc;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return IntPoly();
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(out));
}

CubicPoly::CubicPoly(Rational a3_, Rational a2_, Rational a1_, Rational a0_)
    : a3(std::move(a3_)), a2(std::move(a2_)), a1(std::move(a1_)), a0(std::move(a0_))
{
    if (a3.is_zero())
        throw std::invalid_argument("cubic with zero leading coefficient");
}

CubicPoly CubicPoly::from_symmetric(const Rational& s1, const Rational& s2, const Rational& s3)
{
    return CubicPoly(1, -s1, s2, -s3);
}

Rational CubicPoly::eval(const Rational& y) const { return ((a3 * y + a2) * y + a1) * y + a0; }

QuadraticPoly::QuadraticPoly(Rational a2_, Rational a1_, Rational a0_)
    : a2(std::move(a2_)), a1(std::move(a1_)), a0(std::move(a0_))
{
    if (a2.is_zero())
        throw DegenerateQuadratic();
}

std::pair<Rational, IntPoly> primitive_part(const std::vector<Rational>& coeffs)
{
    BigInt lcm_den = 1;
    for (const auto& q : coeffs)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.den().get_mpz_t());
    std::vector<BigInt> ints;
    ints.reserve(coeffs.size());
    for (const auto& q : coeffs)
        ints.push_back(q.num() * (lcm_den / q.den()));
    IntPoly p(std::move(ints));
    if (p.is_zero())
        throw std::invalid_argument("primitive part of the zero polynomial");
    BigInt g = p.content();
    if (p.leading() < 0)
        g = -g;
    std::vector<BigInt> prim;
    for (const auto& a : p.coeffs()) {
        BigInt q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
        prim.push_back(q);
    }
    return {Rational(g, lcm_den), IntPoly(std::move(prim))};
}

std::vector<BigInt> integer_roots_monic_cubic(const BigInt& b2, const BigInt& b1, const BigInt& b0)
{
    auto f = [&](const BigInt& z) -> BigInt { return ((z + b2) * z + b1) * z + b0; };

    // Every root has |z| < 1 + max |coefficient|.
    BigInt bound = abs(b2);
    if (abs(b1) > bound) bound = abs(b1);
    if (abs(b0) > bound) bound = abs(b0);
    bound += 1;

    std::set<BigInt> roots;
    auto check_range = [&](BigInt lo, const BigInt& hi) {
        for (; lo <= hi; ++lo)
            if (f(lo) == 0)
                roots.insert(lo);
    };
    auto bisect = [&](BigInt lo, BigInt hi) {
        if (lo < -bound) lo = -bound;
        if (hi > bound) hi = bound;
        if (lo > hi)
            return;
        BigInt flo = f(lo);
        BigInt fhi = f(hi);
        if (flo == 0) roots.insert(lo);
        if (fhi == 0) roots.insert(hi);
        if (sgn(flo) * sgn(fhi) >= 0)
            return;
        const int slo = sgn(flo);
        while (hi - lo > 1) {
            BigInt mid = floor_div(lo + hi, 2);
            BigInt fm = f(mid);
            if (fm == 0) {
                roots.insert(mid);
                return;
            }
            if (sgn(fm) == slo)
                lo = mid;
            else
                hi = mid;
        }
    };

    // Critical points of the derivative 3z^2 + 2*b2*z + b1 are
    // (-b2 -+ sqrt(b2^2 - 3*b1)) / 3.
    const BigInt delta = b2 * b2 - 3 * b1;
    if (delta <= 0) {
        bisect(-bound, bound);
    } else {
        const BigInt s = isqrt(delta);
        const BigInt lo1 = floor_div(-b2 - s - 1, 3);
        const BigInt hi1 = ceil_div(-b2 - s, 3);
        const BigInt lo2 = floor_div(-b2 + s, 3);
        const BigInt hi2 = ceil_div(-b2 + s + 1, 3);
        if (hi1 >= lo2) {
            check_range(lo1, hi2);
        } else {
            check_range(lo1, hi1);
            check_range(lo2, hi2);
            bisect(hi1, lo2);
        }
        bisect(-bound, lo1);
        bisect(hi2, bound);
    }
    return {roots.begin(), roots.end()};
}

namespace {

IntPoly linear_factor(const Rational& root)
{
    // q*y - p for root p/q
    return IntPoly({-root.num(), root.den()});
}

// Exact quotient of p by (q*y - r) where r/q is a root of p.
IntPoly divide_by_linear(const IntPoly& p, const IntPoly& lin)
{
    const BigInt& q = lin[1];
    const BigInt r = -lin[0];
    const int n = p.degree();
    std::vector<BigInt> out(static_cast<std::size_t>(n), BigInt(0));
    BigInt carry = 0; // coefficient contribution from the previous step
    for (int k = n; k >= 1; --k) {
        BigInt num = p[static_cast<std::size_t>(k)] + carry;
        BigInt quo;
        mpz_divexact(quo.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
        out[static_cast<std::size_t>(k - 1)] = quo;
        carry = r * quo;
    }
    if (p[0] + carry != 0)
        throw std::logic_error("divide_by_linear: not a factor");
    return IntPoly(std::move(out));
}

bool factor_less(const Factor& x, const Factor& y)
{
    if (x.poly.degree() != y.poly.degree())
        return x.poly.degree() < y.poly.degree();
    const auto& a = x.poly.coeffs();
    const auto& b = y.poly.coeffs();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int c = mpz_cmpabs(a[i].get_mpz_t(), b[i].get_mpz_t());
        if (c != 0)
            return c < 0;
        if (a[i] != b[i])
            return a[i] < b[i];
    }
    return false;
}

void add_linear(std::vector<Factor>& factors, const Rational& root)
{
    IntPoly lin = linear_factor(root);
    for (auto& f : factors) {
        if (f.poly == lin) {
            ++f.multiplicity;
            return;
        }
    }
    factors.push_back({std::move(lin), 1, false});
}

// Factors a primitive quadratic with positive leading coefficient.
void factor_quadratic(const IntPoly& q, std::vector<Factor>& factors)
{
    const BigInt disc = q[1] * q[1] - 4 * q[2] * q[0];
    auto s = exact_isqrt(disc);
    if (!s) {
        factors.push_back({q, 1, true});
        return;
    }
    const BigInt two_a = 2 * q[2];
    add_linear(factors, Rational(-q[1] - *s, two_a));
    add_linear(factors, Rational(-q[1] + *s, two_a));
}

} // namespace

FactorizationResult factor_over_q(const IntPoly& input)
{
    if (input.degree() < 1 || input.degree() > 3)
        throw std::invalid_argument("factor_over_q: degree must be 1, 2 or 3");

    std::vector<Rational> rc;
    for (const auto& a : input.coeffs())
        rc.emplace_back(a);
    auto [unit, p] = primitive_part(rc);

    FactorizationResult out;
    out.unit = unit;
    switch (p.degree()) {
    case 1:
        out.factors.push_back({p, 1, false});
        break;
    case 2:
        factor_quadratic(p, out.factors);
        break;
    case 3: {
        // a3^2 * P(z/a3) = z^3 + a2 z^2 + a1 a3 z + a0 a3^2, so rational roots
        // of P are the integer roots of this monic cubic divided by a3.
        const BigInt& a3 = p[3];
        auto zs = integer_roots_monic_cubic(p[2], p[1] * a3, p[0] * a3 * a3);
        if (zs.empty()) {
            out.factors.push_back({p, 1, true});
            break;
        }
        const Rational root(zs.front(), a3);
        IntPoly lin = linear_factor(root);
        IntPoly rest = divide_by_linear(p, lin);
        out.factors.push_back({std::move(lin), 1, false});
        factor_quadratic(rest, out.factors);
        break;
    }
    }
    std::sort(out.factors.begin(), out.factors.end(), factor_less);
    for (const auto& f : out.factors)
        if (f.poly.degree() == 1)
            out.rational_roots.push_back({Rational(-f.poly[0], f.poly[1]), f.multiplicity});
    std::sort(out.rational_roots.begin(), out.rational_roots.end(),
              [](const auto& x, const auto& y) { return x.root < y.root; });
    return out;
}

FactorizationResult factor_over_q(const CubicPoly& p)
{
    auto [unit, prim] = primitive_part({p.a0, p.a1, p.a2, p.a3});
    FactorizationResult f = factor_over_q(prim);
    f.unit *= unit;
    return f;
}

FactorizationResult factor_over_q(const QuadraticPoly& p)
{
    auto [unit, prim] = primitive_part({p.a0, p.a1, p.a2});
    FactorizationResult f = factor_over_q(prim);
    f.unit *= unit;
    return f;
}

bool FactorizationResult::splits_completely() const
{
    return std::all_of(factors.begin(), factors.end(), [](const Factor& f) { return f.poly.degree() == 1; });
}

std::vector<Rational> FactorizationResult::root_list() const
{
    std::vector<Rational> out;
    for (const auto& rm : rational_roots)
        for (int i = 0; i < rm.multiplicity; ++i)
            out.push_back(rm.root);
    return out;
}

std::vector<Rational> FactorizationResult::expand() const
{
    IntPoly prod({BigInt(1)});
    for (const auto& f : factors)
        for (int i = 0; i < f.multiplicity; ++i)
            prod = prod * f.poly;
    std::vector<Rational> out;
    for (const auto& a : prod.coeffs())
        out.push_back(unit * Rational(a));
    return out;
}

std::vector<RootMultiplicity> rational_roots(const CubicPoly& p) { return factor_over_q(p).rational_roots; }

Rational discriminant(const QuadraticPoly& q) { return q.a1 * q.a1 - 4 * q.a2 * q.a0; }

PellPoint pell_like_param(const Rational& t)
{
    if (t.is_zero())
        throw DomainRestriction(Restriction::ZeroParameter, "parameter t must be nonzero");
    const Rational t2 = t * t;
    const Rational two_t = 2 * t;
    return {(t2 + 2) / two_t, (t2 - 2) / two_t};
}

std::string format_poly(const IntPoly& p, char var)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const BigInt& a = p[static_cast<std::size_t>(k)];
        if (a == 0)
            continue;
        if (a < 0)
            os << '-';
        else if (!first)
            os << '+';
        const BigInt mag = abs(a);
        if (k == 0) {
            os << mag;
        } else {
            if (mag != 1)
                os << mag << ' ';
            os << var;
            if (k > 1)
                os << '^' << k;
        }
        first = false;
    }
    return os.str();
}

std::string format_factorization(const FactorizationResult& f, char var)
{
    std::ostringstream os;
    if (f.unit == Rational(-1))
        os << '-';
    else if (f.unit != Rational(1))
        os << f.unit << ' ';
    bool after_bare = false;
    for (const auto& fac : f.factors) {
        const bool bare = fac.poly.degree() == 1 && fac.poly[0] == 0 && fac.poly[1] == 1;
        if (after_bare)
            os << ' ';
        if (bare)
            os << var;
        else
            os << '(' << format_poly(fac.poly, var) << ')';
        if (fac.multiplicity > 1)
            os << '^' << fac.multiplicity;
        after_bare = bare;
    }
    return os.str();
}

} // namespace cuboid
