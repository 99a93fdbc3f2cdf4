#pragma once

#include <algorithm>
#include <vector>

#include "cuboid/cubic.hpp"

namespace cuboid::testing {

inline std::vector<long> divisors(long n)
{
    std::vector<long> out;
    n = n < 0 ? -n : n;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0)
            out.push_back(d);
    return out;
}

/// Rational roots of a3 y^3 + a2 y^2 + a1 y + a0 (a3 != 0) by testing every
/// +-p/q with p dividing the lowest nonzero coefficient and q dividing a3.
/// Multiplicity is the number of vanishing derivatives.
inline std::vector<RootMultiplicity> brute_force_roots(long a3, long a2, long a1, long a0)
{
    const long low = a0 != 0 ? a0 : (a1 != 0 ? a1 : (a2 != 0 ? a2 : a3));
    std::vector<Rational> candidates;
    if (a0 == 0)
        candidates.push_back(0);
    for (long p : divisors(low))
        for (long q : divisors(a3))
            for (long s : {-1L, 1L})
                candidates.emplace_back(BigInt(s * p), BigInt(q));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<RootMultiplicity> out;
    for (const Rational& r : candidates) {
        const Rational f0 = ((Rational(a3) * r + a2) * r + a1) * r + a0;
        const Rational f1 = (Rational(3 * a3) * r + 2 * a2) * r + a1;
        const Rational f2 = Rational(6 * a3) * r + 2 * a2;
        if (!f0.is_zero())
            continue;
        out.push_back({r, f1.is_zero() ? (f2.is_zero() ? 3 : 2) : 1});
    }
    return out;
}

} // namespace cuboid::testing
