#pragma once

#include <array>
#include <optional>
#include <span>

#include "cuboid/coefficients.hpp"
#include "cuboid/rational.hpp"

namespace cuboid {

/// Candidate edges x and face diagonals d of a cuboid with unit space
/// diagonal. d[i] belongs to the face that does not contain edge x[i].
struct RootSet {
    std::array<Rational, 3> x;
    std::array<Rational, 3> d;

    friend bool operator==(const RootSet&, const RootSet&) = default;
};

struct MixedSums {
    Rational e21, e11, e12;

    friend bool operator==(const MixedSums&, const MixedSums&) = default;
};

/// x1^2+x2^2+x3^2 = 1 and x_j^2 + x_k^2 = d_i^2 for {i, j, k} = {1, 2, 3}.
bool check_cuboid(const RootSet& r);

/// The three mixed edge/diagonal sums of r.
MixedSums mixed_sums(const RootSet& r);

bool check_auxiliary(const RootSet& r, const Rational& e21, const Rational& e11, const Rational& e12);

/// Elementary symmetric values of x and of d against cs.
bool check_vieta(const RootSet& r, const CoefficientSet& cs);

/// All six values strictly positive and the cuboid equations hold.
bool is_perfect(const RootSet& r);

/// Searches the pairings of `d` against `x` for one that satisfies the
/// cuboid, auxiliary and symmetric checks against cs.
std::optional<RootSet> find_consistent_pairing(std::span<const Rational, 3> x, std::span<const Rational, 3> d,
                                               const CoefficientSet& cs);

} // namespace cuboid
