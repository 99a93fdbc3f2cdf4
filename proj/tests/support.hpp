#pragma once

#include <cstdint>
#include <random>

#include "cuboid/coefficients.hpp"
#include "cuboid/rational.hpp"

namespace cuboid::testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline long uniform(std::mt19937_64& g, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(g);
}

/// Random rational of height <= h.
inline Rational random_rational(std::mt19937_64& g, long h)
{
    return Rational(BigInt(uniform(g, -h, h)), BigInt(uniform(g, 1, h)));
}

inline Rational random_nonzero(std::mt19937_64& g, long h)
{
    for (;;)
        if (Rational q = random_rational(g, h); !q.is_zero())
            return q;
}

inline ParamPoint random_guarded_point(std::mt19937_64& g, long h)
{
    for (;;) {
        ParamPoint p{random_rational(g, h), random_rational(g, h)};
        if (guard(p))
            return p;
    }
}

inline Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

} // namespace cuboid::testing
