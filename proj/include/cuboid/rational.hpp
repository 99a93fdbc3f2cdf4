#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "cuboid/errors.hpp"

namespace cuboid {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is stored as 0/1, so equality is structural.
class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}             // NOLINT(implicit)
    Rational(int value) : v_(static_cast<long>(value)) {} // NOLINT(implicit)
    explicit Rational(const BigInt& value) : v_(value) {}
    /// Throws ZeroDenominator when `den` is zero.
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "p/q", "-p/q" or "p" (ASCII digits only, no whitespace).
    static Rational parse(std::string_view text);

    const BigInt& num() const { return v_.get_num(); }
    const BigInt& den() const { return v_.get_den(); }
    const mpq_class& raw() const noexcept { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// max(|p|, q) for p/q in lowest terms.
    BigInt height() const;

    Rational abs() const;
    Rational inverse() const;
    Rational pow(int exponent) const;

    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Builds the lowest-terms representative of num/den.
Rational rat_normalize(const BigInt& num, const BigInt& den);

/// floor(sqrt(n)) for n >= 0; throws std::domain_error for negative n.
BigInt isqrt(const BigInt& n);

/// The exact integer square root when n is a perfect square.
std::optional<BigInt> exact_isqrt(const BigInt& n);

/// The nonnegative r with r*r == q, if q is the square of a rational.
std::optional<Rational> is_rational_square(const Rational& q);

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

struct RationalHash {
    std::size_t operator()(const Rational& q) const;
};

} // namespace cuboid
