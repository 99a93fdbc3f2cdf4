#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cuboid/coefficients.hpp"
#include "cuboid/verify.hpp"

namespace cuboid {

/// The six parameter conditions under which both cubics have a rational
/// root: b = 0, c = 0, c = 1, c = 2, and the two further factors of e30
/// whose vanishing puts d = -1 or d = +1 among the diagonal roots.
enum class CaseId { BZero, CZero, COne, CTwo, DiagonalMinusOne, DiagonalPlusOne };

inline constexpr std::array<CaseId, 6> kAllCases = {CaseId::BZero, CaseId::CZero, CaseId::COne,
                                                    CaseId::CTwo, CaseId::DiagonalMinusOne, CaseId::DiagonalPlusOne};

/// Serialized names: "b0", "c0", "c1", "c2", "cond62", "cond63".
std::string_view case_name(CaseId id);
std::optional<CaseId> parse_case(std::string_view name);

/// Cases satisfied at p, in enumeration order. A point may satisfy several.
std::vector<CaseId> detect_cases(const ParamPoint& p);

/// b*c^2 - 4*b*c + 4*b + 2
Rational diagonal_minus_one_condition(const ParamPoint& p);
/// 2*b*c^2 - 4*b*c + 2*b - c^2
Rational diagonal_plus_one_condition(const ParamPoint& p);

/// Output of one case generator at one parameter value.
struct CaseReport {
    CaseId id;
    std::optional<Rational> parameter; // t for c0/c1/c2, c for the d = -+1 cases
    ParamPoint point;
    std::vector<CaseId> cases;
    RootSet roots;
    /// Mixed sums from the base closed forms at the induced point.
    MixedSums mixed;
    /// Mixed sums from the case's own printed transformed formulas.
    MixedSums printed;
    /// Names among e21, e11, e12 where `printed` disagrees with `mixed`.
    std::vector<std::string> printed_mismatches;
    bool cuboid_ok = false;
    bool aux_ok = false;
    bool vieta_ok = false;
    bool perfect = false;
};

/// b = 0 with x = (1, 0, 0), d = (0, 1, -1). The induced point uses the
/// given c, which must be nonzero.
CaseReport case_b0_roots(const Rational& c = 5);
/// c = 0 with b = (t^2 - 4t + 2) / (2t); t != 0.
CaseReport case_c0_roots(const Rational& t);
/// c = 1 with b = 2t / ((t - 2)^2 - 2); any t.
CaseReport case_c1_roots(const Rational& t);
/// c = 2 with b = 2t / ((t + 2)^2 - 2); any t.
CaseReport case_c2_roots(const Rational& t);
/// b = -2 / (c - 2)^2; c != 2.
CaseReport case_cond62_roots(const Rational& c);
/// b = c^2 / (2 (c - 1)^2); c != 0, c != 1.
CaseReport case_cond63_roots(const Rational& c);

/// Dispatches to the generator of `id`. `param` is ignored-or-optional for
/// b0 (defaults to c = 5) and required otherwise.
CaseReport generate_case(CaseId id, const std::optional<Rational>& param);

/// Parameter values whose generator induces exactly p (empty when no
/// rational parameter exists or p does not satisfy the case).
std::vector<Rational> case_parameters_for(CaseId id, const ParamPoint& p);

/// (Q(-1), Q(1)) from the closed forms, where Q is the diagonal cubic.
/// Throws GuardViolation.
std::pair<Rational, Rational> q_at_special_points(const ParamPoint& p);

/// The same closed forms as rational functions in (b, c).
std::pair<RationalFunction, RationalFunction> q_special_symbolic();

} // namespace cuboid
