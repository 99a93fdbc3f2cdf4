#include "cuboid/rational.hpp"

#include <cctype>

namespace cuboid {

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw ZeroDenominator();
    v_.get_num() = num;
    v_.get_den() = den;
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto fail = [&](const char* why) {
        return ParseError("invalid rational '" + std::string(text) + "': " + why);
    };
    if (text.empty())
        throw fail("empty");

    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '-') {
        negative = true;
        pos = 1;
    }
    auto read_digits = [&](std::string_view& out) {
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
            ++pos;
        out = text.substr(start, pos - start);
        return !out.empty();
    };

    std::string_view num_digits;
    std::string_view den_digits = "1";
    if (!read_digits(num_digits))
        throw fail("expected digits");
    if (pos < text.size()) {
        if (text[pos] != '/')
            throw fail("unexpected character");
        ++pos;
        if (!read_digits(den_digits))
            throw fail("expected denominator digits");
        if (pos != text.size())
            throw fail("trailing characters");
    }

    BigInt num(std::string(num_digits), 10);
    BigInt den(std::string(den_digits), 10);
    if (den == 0)
        throw fail("zero denominator");
    if (negative)
        num = -num;
    return Rational(num, den);
}

BigInt Rational::height() const
{
    BigInt a = ::abs(v_.get_num());
    return a > v_.get_den() ? a : BigInt(v_.get_den());
}

Rational Rational::abs() const
{
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw ZeroDenominator("inverse of zero");
    Rational r;
    mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

Rational Rational::pow(int exponent) const
{
    if (exponent < 0)
        return inverse().pow(-exponent);
    Rational r;
    mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return r;
}

std::string Rational::to_string() const
{
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const
{
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw ZeroDenominator("division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Rational rat_normalize(const BigInt& num, const BigInt& den) { return Rational(num, den); }

BigInt isqrt(const BigInt& n)
{
    if (n < 0)
        throw std::domain_error("isqrt of negative integer");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<BigInt> exact_isqrt(const BigInt& n)
{
    if (n < 0)
        return std::nullopt;
    BigInt root;
    BigInt rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0)
        return std::nullopt;
    return root;
}

std::optional<Rational> is_rational_square(const Rational& q)
{
    if (q.sign() < 0)
        return std::nullopt;
    auto num = exact_isqrt(q.num());
    if (!num)
        return std::nullopt;
    auto den = exact_isqrt(q.den());
    if (!den)
        return std::nullopt;
    return Rational(*num, *den);
}

BigInt floor_div(const BigInt& a, const BigInt& b)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b)
{
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

std::size_t RationalHash::operator()(const Rational& q) const
{
    std::size_t h = std::hash<std::string>{}(q.num().get_str(16));
    h ^= std::hash<std::string>{}(q.den().get_str(16)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

} // namespace cuboid
