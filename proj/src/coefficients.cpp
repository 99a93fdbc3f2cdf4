#include "cuboid/coefficients.hpp"

#include <algorithm>
#include <vector>

namespace cuboid {

namespace {

// Closed forms of the nine coefficients with unit space diagonal, written as
// a rational scale times a product of polynomial factors raised to integer
// powers. Polynomial texts are copied term by term, in the printed order.
struct FormFactor {
    std::string_view poly;
    int power;
};

struct ClosedForm {
    std::string_view name;
    long scale_num;
    long scale_den;
    std::vector<FormFactor> factors;
};

constexpr std::string_view kBase = "b^2*c^2+2*b^2-3*b^2*c+c-b*c^2+2*b";
constexpr std::string_view kQuartic = "b^2*c^4-6*b^2*c^3+13*b^2*c^2-12*b^2*c+4*b^2+c^2";
constexpr std::string_view kSecond = "b*c-1-b";
constexpr std::string_view kThird = "b*c-c-2*b";
constexpr std::string_view kThirdAlt = "-c+b*c-2*b";

const std::vector<ClosedForm>& closed_forms()
{
    static const std::vector<ClosedForm> forms = {
        {"e11", -1, 1, {{"b", 1}, {"c^2+2-4*c", 1}, {kBase, -1}}},
        {"e01", -1, 1, {{"b", 1}, {"c^2+2-2*c", 1}, {kBase, -1}}},
        {"e10", -1, 1, {{"b^2*c^2+2*b^2-3*b^2*c-c", 1}, {kBase, -1}}},
        {"e20", 1, 2,
         {{"b", 1}, {"b*c^2-2*c-2*b", 1}, {"2*b*c^2-c^2-6*b*c+2+4*b", 1}, {kSecond, -2}, {kThird, -2}}},
        {"e02", 1, 2,
         {{"28*b^2*c^2-16*b^2*c-2*c^2-4*b^2-b^2*c^4+4*b^3*c^4-12*b^3*c^3"
           "+4*b*c^3+24*b^3*c-8*b*c-2*b^4*c^4+12*b^4*c^3-26*b^4*c^2-8*b^2*c^3"
           "+24*b^4*c-16*b^3-8*b^4",
           1},
          {kSecond, -2},
          {kThird, -2}}},
        {"e21", 1, 2,
         {{"b", 1},
          {"5*c^6*b-2*c^6*b^2+52*c^5*b^2-16*c^5*b-2*c^7*b^2+2*b^4*c^8"
           "+142*b^4*c^6-26*b^4*c^7-426*b^4*c^5-61*b^3*c^6+100*b^3*c^5+14*c^7*b^3"
           "-c^8*b^3-20*b*c^2-8*b^2*c^2-16*b^2*c-128*b^2*c^4-200*b^3*c^3"
           "+244*b^3*c^2+32*b*c^3-112*b^3*c+768*b^4*c^4-852*b^4*c^3+568*b^4*c^2"
           "+104*b^2*c^3-208*b^4*c+8*c^4-4*c^3+16*b^3+32*b^4-2*c^5",
           1},
          {kQuartic, -1},
          {kSecond, -2},
          {kThird, -2}}},
        {"e12", 1, 1,
         {{"16*b^6+32*b^5-6*c^5*b^2+2*c^5*b-62*b^5*c^6+62*b^6*c^6"
           "-180*b^6*c^5+18*b^5*c^7-12*b^6*c^7-2*b^5*c^8+b^6*c^8+248*b^5*c^2"
           "+248*b^6*c^2-96*b^6*c+321*b^6*c^4-180*b^5*c^3-144*b^5*c-360*b^6*c^3"
           "+b^4*c^8+8*b^4*c^6-6*b^4*c^7+18*b^4*c^5+7*b^3*c^6+90*b^5*c^5-14*b^3*c^5"
           "-c^7*b^3+17*b^2*c^4+28*b^3*c^3-28*b^3*c^2-4*b*c^3+8*b^3*c-57*b^4*c^4"
           "+36*b^4*c^3+32*b^4*c^2-12*b^2*c^3-48*b^4*c-c^4+16*b^4",
           1},
          {kQuartic, -1},
          {kSecond, -2},
          {kThird, -2}}},
        // The printed denominator carries one stray opening parenthesis; it is
        // read as a single inverse of the quartic factor.
        {"e03", 1, 2,
         {{"b", 1},
          {"b^2*c^4-5*b^2*c^3+10*b^2*c^2-10*b^2*c+4*b^2+2*b*c+2*c^2-b*c^3", 1},
          {"2*b^2*c^4-12*b^2*c^3+26*b^2*c^2-24*b^2*c+8*b^2-c^4*b+3*b*c^3-6*b*c+4*b+c^3-2*c^2+2*c", 1},
          {kQuartic, -1},
          {kSecond, -2},
          {kThirdAlt, -2}}},
        {"e30", 1, 1,
         {{"c", 1},
          {"b", 2},
          {"1-c", 1},
          {"c-2", 1},
          {"b*c^2-4*b*c+2+4*b", 1},
          {"2*b*c^2-c^2-4*b*c+2*b", 1},
          {kQuartic, -1},
          {kSecond, -2},
          {kThirdAlt, -2}}},
    };
    return forms;
}

// Distinct factor polynomials compiled once; each form refers to them by index.
struct CompiledForms {
    struct Ref {
        std::size_t poly;
        int power;
    };
    struct Form {
        std::string_view name;
        Rational scale;
        std::vector<Ref> refs;
    };

    std::vector<MultiPoly> polys;
    std::vector<CompiledPoly> compiled;
    std::vector<Form> forms;
    CompiledPoly quartic;
    CompiledPoly second;
    CompiledPoly third;

    CompiledForms()
    {
        for (const auto& cf : closed_forms()) {
            Form f{cf.name, Rational(BigInt(cf.scale_num), BigInt(cf.scale_den)), {}};
            for (const auto& fac : cf.factors) {
                MultiPoly p = MultiPoly::parse(fac.poly, param_vars());
                auto it = std::find(polys.begin(), polys.end(), p);
                std::size_t idx = static_cast<std::size_t>(it - polys.begin());
                if (it == polys.end()) {
                    polys.push_back(p);
                    compiled.emplace_back(p);
                }
                f.refs.push_back({idx, fac.power});
            }
            forms.push_back(std::move(f));
        }
        quartic = CompiledPoly(MultiPoly::parse(kQuartic, param_vars()));
        second = CompiledPoly(MultiPoly::parse(kSecond, param_vars()));
        third = CompiledPoly(MultiPoly::parse(kThird, param_vars()));
    }
};

const CompiledForms& compiled_forms()
{
    static const CompiledForms cf;
    return cf;
}

Rational* slot(CoefficientSet& cs, std::string_view name)
{
    if (name == "e10") return &cs.e10;
    if (name == "e20") return &cs.e20;
    if (name == "e30") return &cs.e30;
    if (name == "e01") return &cs.e01;
    if (name == "e02") return &cs.e02;
    if (name == "e03") return &cs.e03;
    if (name == "e21") return &cs.e21;
    if (name == "e11") return &cs.e11;
    if (name == "e12") return &cs.e12;
    throw std::invalid_argument("unknown coefficient '" + std::string(name) + "'");
}

} // namespace

const std::vector<std::string>& param_vars()
{
    static const std::vector<std::string> vars = {"b", "c"};
    return vars;
}

bool CoefficientSet::satisfies_relations() const
{
    const Rational half(BigInt(1), BigInt(2));
    if (e20 != (e10 * e10 - 1) * half)
        return false;
    if (e02 != e01 * e01 * half - 1)
        return false;
    const Rational two_e11 = 2 * e11;
    const Rational mid = e01 * e01 + 1 - e10 * e10;
    return two_e11 * two_e11 + mid * mid - 8 * e01 * e01 == Rational(0);
}

const Rational& CoefficientSet::get(std::string_view name) const
{
    return *slot(const_cast<CoefficientSet&>(*this), name);
}

int GuardFactors::first_vanishing() const
{
    if (quartic.is_zero()) return 1;
    if (second.is_zero()) return 2;
    if (third.is_zero()) return 3;
    return 0;
}

unsigned GuardFactors::vanishing_mask() const
{
    return (quartic.is_zero() ? 1u : 0u) | (second.is_zero() ? 2u : 0u) | (third.is_zero() ? 4u : 0u);
}

GuardFactors guard_factors(const ParamPoint& p)
{
    const auto& cf = compiled_forms();
    const std::array<Rational, 2> v = {p.b, p.c};
    return {cf.quartic.eval(v), cf.second.eval(v), cf.third.eval(v)};
}

bool guard(const ParamPoint& p) { return guard_factors(p).first_vanishing() == 0; }

std::string_view guard_factor_name(int index)
{
    switch (index) {
    case 1: return "b^2c^4-6b^2c^3+13b^2c^2-12b^2c+4b^2+c^2";
    case 2: return "bc-1-b";
    case 3: return "bc-c-2b";
    default: return "none";
    }
}

GuardViolation::GuardViolation(const ParamPoint& p, int factor, unsigned mask)
    : std::domain_error("non-vanishing condition fails at b=" + p.b.to_string() + ", c=" + p.c.to_string() +
                        ": factor " + std::to_string(factor) + " (" + std::string(guard_factor_name(factor)) +
                        ") is zero"),
      point_(p), factor_(factor), mask_(mask)
{
}

void require_guard(const ParamPoint& p)
{
    const GuardFactors g = guard_factors(p);
    if (int k = g.first_vanishing(); k != 0)
        throw GuardViolation(p, k, g.vanishing_mask());
}

CoefficientSet coefficients_at(const ParamPoint& p)
{
    require_guard(p);
    const auto& cf = compiled_forms();
    const std::array<Rational, 2> v = {p.b, p.c};
    std::vector<Rational> values;
    values.reserve(cf.compiled.size());
    for (const auto& poly : cf.compiled)
        values.push_back(poly.eval(v));

    CoefficientSet cs;
    for (const auto& form : cf.forms) {
        Rational num = form.scale;
        Rational den = 1;
        for (const auto& ref : form.refs) {
            if (ref.power > 0)
                num *= values[ref.poly].pow(ref.power);
            else
                den *= values[ref.poly].pow(-ref.power);
        }
        *slot(cs, form.name) = num / den;
    }
    return cs;
}

const SymbolicSet& coefficients_symbolic()
{
    static const SymbolicSet set = [] {
        SymbolicSet out;
        const auto& cf = compiled_forms();
        for (const auto& form : cf.forms) {
            MultiPoly num = MultiPoly::constant(param_vars(), form.scale);
            MultiPoly den = MultiPoly::constant(param_vars(), 1);
            for (const auto& ref : form.refs) {
                const MultiPoly& base = cf.polys[ref.poly];
                if (ref.power > 0)
                    num = num * base.pow(static_cast<unsigned>(ref.power));
                else
                    den = den * base.pow(static_cast<unsigned>(-ref.power));
            }
            out.emplace(std::string(form.name), RationalFunction(std::move(num), std::move(den)));
        }
        return out;
    }();
    return set;
}

SymbolicSet derived_pipeline(const RationalFunction& e10, const RationalFunction& e01, const RationalFunction& e11)
{
    std::vector<std::string> vars = e10.num().vars();
    if (vars.empty())
        vars = e01.num().vars();
    if (vars.empty())
        vars = e11.num().vars();
    auto k = [&](long n, long d = 1) {
        return RationalFunction(MultiPoly::constant(vars, Rational(BigInt(n), BigInt(d))));
    };

    const RationalFunction e10_2 = e10 * e10;
    const RationalFunction e10_3 = e10_2 * e10;
    const RationalFunction e01_2 = e01 * e01;
    const RationalFunction e01_3 = e01_2 * e01;
    const RationalFunction weight = k(8) * (e01_2 + e10_2);

    SymbolicSet out;
    out.emplace("e20", k(1, 2) * e10_2 - k(1, 2));
    out.emplace("e02", k(1, 2) * e01_2 - k(1));
    if (weight.is_zero())
        return out;

    const RationalFunction e21 =
        (k(2) * e10_3 * e11 + k(2) * e01_2 * e10 * e11 - e01 * e10_2 * e10_2 + e01_3 * e01_2 +
         k(6) * e10 * e11 - k(2) * e01 * e10_2 - k(8) * e01_3 + k(3) * e01) /
        weight;
    // Overall sign is negated relative to the printed relation; the printed
    // sign contradicts the mixed sum evaluated on genuine root sets.
    const RationalFunction e12 =
        -((e01_2 * e01_2 * e10 - k(2) * e01_3 * e11 - k(2) * e01 * e10_2 * e11 - e10_3 * e10_2 +
           k(6) * e10_3 - k(6) * e01 * e11 + k(3) * e10) /
          weight);
    out.emplace("e21", e21);
    out.emplace("e12", e12);
    out.emplace("e30", -k(1, 3) * e12 - k(1, 6) * e10 * e01_2 - k(1, 2) * e10 + k(1, 6) * e10_3 +
                           k(1, 3) * e01 * e11);
    out.emplace("e03", -k(1, 3) * e21 - k(1, 6) * e01 * e10_2 - k(5, 6) * e01 + k(1, 6) * e01_3 +
                           k(1, 3) * e10 * e11);
    return out;
}

} // namespace cuboid
