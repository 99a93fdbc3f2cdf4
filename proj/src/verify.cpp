#include "cuboid/verify.hpp"

#include <algorithm>

namespace cuboid {

namespace {

Rational sq(const Rational& q) { return q * q; }

} // namespace

bool check_cuboid(const RootSet& r)
{
    const auto& [x1, x2, x3] = r.x;
    const auto& [d1, d2, d3] = r.d;
    return sq(x1) + sq(x2) + sq(x3) == Rational(1) && sq(x2) + sq(x3) == sq(d1) && sq(x3) + sq(x1) == sq(d2) &&
           sq(x1) + sq(x2) == sq(d3);
}

MixedSums mixed_sums(const RootSet& r)
{
    const auto& [x1, x2, x3] = r.x;
    const auto& [d1, d2, d3] = r.d;
    return {
        x1 * x2 * d3 + x2 * x3 * d1 + x3 * x1 * d2,
        x1 * d2 + d1 * x2 + x2 * d3 + d2 * x3 + x3 * d1 + d3 * x1,
        x1 * d2 * d3 + x2 * d3 * d1 + x3 * d1 * d2,
    };
}

bool check_auxiliary(const RootSet& r, const Rational& e21, const Rational& e11, const Rational& e12)
{
    return mixed_sums(r) == MixedSums{e21, e11, e12};
}

bool check_vieta(const RootSet& r, const CoefficientSet& cs)
{
    auto matches = [](const std::array<Rational, 3>& v, const Rational& s1, const Rational& s2, const Rational& s3) {
        return v[0] + v[1] + v[2] == s1 && v[0] * v[1] + v[1] * v[2] + v[2] * v[0] == s2 && v[0] * v[1] * v[2] == s3;
    };
    return matches(r.x, cs.e10, cs.e20, cs.e30) && matches(r.d, cs.e01, cs.e02, cs.e03);
}

bool is_perfect(const RootSet& r)
{
    auto positive = [](const Rational& q) { return q.sign() > 0; };
    return std::all_of(r.x.begin(), r.x.end(), positive) && std::all_of(r.d.begin(), r.d.end(), positive) &&
           check_cuboid(r);
}

std::optional<RootSet> find_consistent_pairing(std::span<const Rational, 3> x, std::span<const Rational, 3> d,
                                               const CoefficientSet& cs)
{
    RootSet r{{x[0], x[1], x[2]}, {d[0], d[1], d[2]}};
    std::sort(r.d.begin(), r.d.end());
    do {
        if (check_cuboid(r) && check_auxiliary(r, cs.e21, cs.e11, cs.e12) && check_vieta(r, cs))
            return r;
    } while (std::next_permutation(r.d.begin(), r.d.end()));
    return std::nullopt;
}

} // namespace cuboid
