#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cuboid/multipoly.hpp"
#include "cuboid/rational.hpp"

namespace cuboid {

/// A candidate (b, c) of the two-parameter family. Any values are allowed;
/// the guard decides whether coefficients exist there.
struct ParamPoint {
    Rational b;
    Rational c;

    friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

/// The nine symmetric and multisymmetric values of a cuboid with unit space
/// diagonal: e10, e20, e30 of the edges, e01, e02, e03 of the face diagonals,
/// and the mixed sums e21, e11, e12.
struct CoefficientSet {
    Rational e10, e20, e30;
    Rational e01, e02, e03;
    Rational e21, e11, e12;

    /// e20, e02 against e10, e01 and the biquadratic relation between
    /// e10, e01 and e11.
    bool satisfies_relations() const;

    const Rational& get(std::string_view name) const;

    friend bool operator==(const CoefficientSet&, const CoefficientSet&) = default;
};

inline constexpr std::array<std::string_view, 9> kCoefficientNames = {
    "e10", "e20", "e30", "e01", "e02", "e03", "e21", "e11", "e12"};

inline constexpr std::array<std::string_view, 6> kDerivedNames = {"e20", "e02", "e21", "e12", "e30", "e03"};

/// Values of the three factors of the non-vanishing condition, in order:
/// b^2c^4-6b^2c^3+13b^2c^2-12b^2c+4b^2+c^2, bc-1-b, bc-c-2b.
struct GuardFactors {
    Rational quartic;
    Rational second;
    Rational third;

    /// 1-based index of the first vanishing factor, 0 when none vanishes.
    int first_vanishing() const;
    /// Bit i-1 set when factor i vanishes.
    unsigned vanishing_mask() const;
};

GuardFactors guard_factors(const ParamPoint& p);

/// True when no denominator of the closed forms vanishes at p.
bool guard(const ParamPoint& p);

/// Printable form of guard factor 1, 2 or 3.
std::string_view guard_factor_name(int index);

class GuardViolation : public std::domain_error {
public:
    GuardViolation(const ParamPoint& p, int factor, unsigned mask);

    /// 1, 2 or 3: the first factor that vanishes.
    int factor() const noexcept { return factor_; }
    unsigned mask() const noexcept { return mask_; }
    const ParamPoint& point() const noexcept { return point_; }

private:
    ParamPoint point_;
    int factor_;
    unsigned mask_;
};

/// Throws GuardViolation if guard(p) is false.
void require_guard(const ParamPoint& p);

/// All nine values at p from the closed forms. Throws GuardViolation.
CoefficientSet coefficients_at(const ParamPoint& p);

using SymbolicSet = std::map<std::string, RationalFunction, std::less<>>;

/// Variables of every symbolic object in this library.
const std::vector<std::string>& param_vars();

/// The nine closed forms as rational functions in (b, c).
const SymbolicSet& coefficients_symbolic();

/// e20, e02, e21, e12, e30, e03 from e10, e01, e11 through the general
/// relations with unit space diagonal. When e10^2 + e01^2 is identically
/// zero only e20 and e02 are defined and returned.
SymbolicSet derived_pipeline(const RationalFunction& e10, const RationalFunction& e01,
                             const RationalFunction& e11);

} // namespace cuboid
