#include "cuboid/cases.hpp"

#include <algorithm>

namespace cuboid {

namespace {

Rational sq(const Rational& q) { return q * q; }

// Solutions in t of a*t^2 + b*t + c = 0 over Q (a may be zero).
std::vector<Rational> rational_solutions(const Rational& a, const Rational& b, const Rational& c)
{
    std::vector<Rational> out;
    if (a.is_zero()) {
        if (!b.is_zero())
            out.push_back(-c / b);
        return out;
    }
    auto s = is_rational_square(b * b - 4 * a * c);
    if (!s)
        return out;
    out.push_back((-b - *s) / (2 * a));
    out.push_back((-b + *s) / (2 * a));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CaseReport finish(CaseId id, std::optional<Rational> param, ParamPoint point, RootSet roots, MixedSums printed)
{
    CaseReport r;
    r.id = id;
    r.parameter = std::move(param);
    r.point = std::move(point);
    r.roots = std::move(roots);
    r.printed = std::move(printed);

    const CoefficientSet cs = coefficients_at(r.point); // throws GuardViolation
    r.cases = detect_cases(r.point);
    r.mixed = {cs.e21, cs.e11, cs.e12};
    if (r.printed.e21 != r.mixed.e21) r.printed_mismatches.emplace_back("e21");
    if (r.printed.e11 != r.mixed.e11) r.printed_mismatches.emplace_back("e11");
    if (r.printed.e12 != r.mixed.e12) r.printed_mismatches.emplace_back("e12");
    r.cuboid_ok = check_cuboid(r.roots);
    r.aux_ok = check_auxiliary(r.roots, cs.e21, cs.e11, cs.e12);
    r.vieta_ok = check_vieta(r.roots, cs);
    r.perfect = is_perfect(r.roots);
    return r;
}

} // namespace

std::string_view case_name(CaseId id)
{
    switch (id) {
    case CaseId::BZero: return "b0";
    case CaseId::CZero: return "c0";
    case CaseId::COne: return "c1";
    case CaseId::CTwo: return "c2";
    case CaseId::DiagonalMinusOne: return "cond62";
    case CaseId::DiagonalPlusOne: return "cond63";
    }
    return "?";
}

std::optional<CaseId> parse_case(std::string_view name)
{
    for (CaseId id : kAllCases)
        if (case_name(id) == name)
            return id;
    return std::nullopt;
}

Rational diagonal_minus_one_condition(const ParamPoint& p)
{
    const Rational& b = p.b;
    const Rational& c = p.c;
    return b * c * c - 4 * b * c + 4 * b + 2;
}

Rational diagonal_plus_one_condition(const ParamPoint& p)
{
    const Rational& b = p.b;
    const Rational& c = p.c;
    return 2 * b * c * c - 4 * b * c + 2 * b - c * c;
}

std::vector<CaseId> detect_cases(const ParamPoint& p)
{
    std::vector<CaseId> out;
    if (p.b.is_zero()) out.push_back(CaseId::BZero);
    if (p.c == Rational(0)) out.push_back(CaseId::CZero);
    if (p.c == Rational(1)) out.push_back(CaseId::COne);
    if (p.c == Rational(2)) out.push_back(CaseId::CTwo);
    if (diagonal_minus_one_condition(p).is_zero()) out.push_back(CaseId::DiagonalMinusOne);
    if (diagonal_plus_one_condition(p).is_zero()) out.push_back(CaseId::DiagonalPlusOne);
    return out;
}

CaseReport case_b0_roots(const Rational& c)
{
    if (c.is_zero())
        throw DomainRestriction(Restriction::CEqualsZero, "b0 requires c != 0");
    RootSet roots{{1, 0, 0}, {0, 1, -1}};
    return finish(CaseId::BZero, c, {0, c}, roots, {0, 0, -1});
}

CaseReport case_c0_roots(const Rational& t)
{
    if (t.is_zero())
        throw DomainRestriction(Restriction::ZeroParameter, "c0 requires t != 0");
    const Rational w = sq(t - 1) + 1;
    const Rational b = (t * t - 4 * t + 2) / (2 * t);
    RootSet roots{{0, -t * (t - 2) / w, 2 * (t - 1) / w}, {-1, -2 * (t - 1) / w, t * (t - 2) / w}};
    MixedSums printed{2 * t * (t * t - 3 * t + 2) / w, -2 * t / w, 1};
    return finish(CaseId::CZero, t, {b, 0}, roots, printed);
}

CaseReport case_c1_roots(const Rational& t)
{
    const Rational w = sq(t - 1) + 1;
    const Rational b = 2 * t / (sq(t - 2) - 2);
    RootSet roots{{0, t * (t - 2) / w, -2 * (t - 1) / w}, {-1, -2 * (t - 1) / w, t * (t - 2) / w}};
    MixedSums printed{2 * (t * t - 3 * t + 2) * t / sq(w), 2 * t / w, -1};
    return finish(CaseId::COne, t, {b, 1}, roots, printed);
}

CaseReport case_c2_roots(const Rational& t)
{
    const Rational w = sq(t + 1) + 1;
    const Rational b = 2 * t / (sq(t + 2) - 2);
    RootSet roots{{0, 2 * (t + 1) / w, t * (t + 2) / w}, {1, -t * (t + 2) / w, -2 * (t + 1) / w}};
    MixedSums printed{2 * (t * t + 3 * t + 2) * t / sq(w), 2 * t / w, -1};
    return finish(CaseId::CTwo, t, {b, 2}, roots, printed);
}

CaseReport case_cond62_roots(const Rational& c)
{
    if (c == Rational(2))
        throw DomainRestriction(Restriction::CEqualsTwo, "cond62 requires c != 2");
    const Rational w = sq(c - 1) + 1;
    const Rational b = Rational(-2) / sq(c - 2);
    RootSet roots{{0, -2 * (c - 1) / w, c * (c - 2) / w}, {-1, c * (c - 2) / w, 2 * (c - 1) / w}};
    const Rational k = sq(c - 2) - 2;
    MixedSums printed{2 * (c - 2) * (c - 1) * c / sq(w), 2 * k * (c - 2) / sq(w), -k * (c * c - 2) / sq(w)};
    return finish(CaseId::DiagonalMinusOne, c, {b, c}, roots, printed);
}

CaseReport case_cond63_roots(const Rational& c)
{
    if (c.is_zero())
        throw DomainRestriction(Restriction::CEqualsZero, "cond63 requires c != 0");
    if (c == Rational(1))
        throw DomainRestriction(Restriction::CEqualsOne, "cond63 requires c != 1");
    const Rational w = sq(c - 1) + 1;
    const Rational b = c * c / (2 * sq(c - 1));
    RootSet roots{{0, -2 * (c - 1) / w, c * (c - 2) / w}, {1, c * (c - 2) / w, 2 * (c - 1) / w}};
    const Rational k = sq(c - 2) - 2;
    MixedSums printed{-2 * (c - 2) * (c - 1) * c / sq(w), 2 * c * k * (c - 1) / sq(w), k * (c * c - 2) / sq(w)};
    return finish(CaseId::DiagonalPlusOne, c, {b, c}, roots, printed);
}

CaseReport generate_case(CaseId id, const std::optional<Rational>& param)
{
    if (id == CaseId::BZero)
        return case_b0_roots(param.value_or(Rational(5)));
    if (!param)
        throw std::invalid_argument(std::string(case_name(id)) + " needs a parameter");
    switch (id) {
    case CaseId::CZero: return case_c0_roots(*param);
    case CaseId::COne: return case_c1_roots(*param);
    case CaseId::CTwo: return case_c2_roots(*param);
    case CaseId::DiagonalMinusOne: return case_cond62_roots(*param);
    case CaseId::DiagonalPlusOne: return case_cond63_roots(*param);
    default: break;
    }
    throw std::logic_error("unreachable");
}

std::vector<Rational> case_parameters_for(CaseId id, const ParamPoint& p)
{
    const Rational& b = p.b;
    const Rational& c = p.c;
    switch (id) {
    case CaseId::BZero:
        if (b.is_zero() && !c.is_zero())
            return {c};
        return {};
    case CaseId::CZero:
        // 2*t*b = t^2 - 4t + 2
        if (!c.is_zero())
            return {};
        return rational_solutions(1, -(4 + 2 * b), 2);
    case CaseId::COne:
        // b*((t-2)^2 - 2) = 2t
        if (c != Rational(1))
            return {};
        return rational_solutions(b, -(4 * b + 2), 2 * b);
    case CaseId::CTwo:
        // b*((t+2)^2 - 2) = 2t
        if (c != Rational(2))
            return {};
        return rational_solutions(b, 4 * b - 2, 2 * b);
    case CaseId::DiagonalMinusOne:
        if (c != Rational(2) && diagonal_minus_one_condition(p).is_zero())
            return {c};
        return {};
    case CaseId::DiagonalPlusOne:
        if (!c.is_zero() && c != Rational(1) && diagonal_plus_one_condition(p).is_zero())
            return {c};
        return {};
    }
    return {};
}

std::pair<Rational, Rational> q_at_special_points(const ParamPoint& p)
{
    const GuardFactors g = guard_factors(p);
    if (int k = g.first_vanishing(); k != 0)
        throw GuardViolation(p, k, g.vanishing_mask());
    const Rational& b = p.b;
    const Rational& c = p.c;
    const Rational den = g.quartic * sq(g.second) * sq(g.third);
    const Rational minus_one = -sq(c - 1) * sq(diagonal_minus_one_condition(p)) * sq(b) * sq(c) / den;
    const Rational plus_one = sq(c - 2) * sq(diagonal_plus_one_condition(p)) * sq(b) / den;
    return {minus_one, plus_one};
}

std::pair<RationalFunction, RationalFunction> q_special_symbolic()
{
    const auto& v = param_vars();
    auto P = [&](std::string_view s) { return MultiPoly::parse(s, v); };
    const MultiPoly den = P("b^2*c^4-6*b^2*c^3+13*b^2*c^2-12*b^2*c+4*b^2+c^2") * P("b*c-1-b").pow(2) *
                          P("b*c-c-2*b").pow(2);
    const MultiPoly minus_one =
        -(P("c-1").pow(2) * P("b*c^2-4*b*c+4*b+2").pow(2) * P("b^2*c^2"));
    const MultiPoly plus_one = P("c-2").pow(2) * P("2*b*c^2-4*b*c+2*b-c^2").pow(2) * P("b^2");
    return {RationalFunction(minus_one, den), RationalFunction(plus_one, den)};
}

} // namespace cuboid
