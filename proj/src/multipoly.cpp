#include "cuboid/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cuboid {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const
{
    const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db)
        return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& value)
{
    MultiPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), value);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::string_view name)
{
    MultiPoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[p.var_index(name)] = 1;
    p.add_term(e, 1);
    return p;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars)
    {
    }

    MultiPoly run()
    {
        MultiPoly out(vars_);
        skip_ws();
        bool first = true;
        while (pos_ < text_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [e, coeff] = term();
            out.add_term(e, sign < 0 ? -coeff : coeff);
            first = false;
            skip_ws();
        }
        if (first)
            fail("empty polynomial");
        return out;
    }

private:
    std::pair<Exponents, Rational> term()
    {
        Exponents e(vars_.size(), 0);
        Rational coeff = 1;
        while (true) {
            skip_ws();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                BigInt num(digits(), 10);
                BigInt den = 1;
                if (peek() == '/') {
                    ++pos_;
                    den = BigInt(digits(), 10);
                }
                coeff *= Rational(num, den);
            } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
                const std::size_t start = pos_;
                while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                    ++pos_;
                const std::string name(text_.substr(start, pos_ - start));
                auto it = std::find(vars_.begin(), vars_.end(), name);
                if (it == vars_.end())
                    fail("unknown variable '" + name + "'");
                unsigned power = 1;
                skip_ws();
                if (peek() == '^') {
                    ++pos_;
                    skip_ws();
                    power = static_cast<unsigned>(std::stoul(digits()));
                }
                e[static_cast<std::size_t>(it - vars_.begin())] += power;
            } else {
                fail("expected number or variable");
            }
            skip_ws();
            if (peek() != '*')
                break;
            ++pos_;
        }
        return {e, coeff};
    }

    std::string digits()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const
    {
        throw ParseError("polynomial '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + why);
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

} // namespace

MultiPoly MultiPoly::parse(std::string_view text, std::vector<std::string> vars)
{
    return PolyParser(text, vars).run();
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

unsigned MultiPoly::total_degree() const
{
    if (terms_.empty())
        return 0;
    const auto& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0u);
}

unsigned MultiPoly::degree_in(std::size_t var) const
{
    unsigned d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e[var]);
    return d;
}

std::size_t MultiPoly::var_index(std::string_view name) const
{
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end())
        throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

const std::pair<const Exponents, Rational>& MultiPoly::leading() const
{
    if (terms_.empty())
        throw std::logic_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

Rational MultiPoly::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& coeff)
{
    if (e.size() != vars_.size())
        throw std::invalid_argument("exponent vector length does not match variable count");
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Rational MultiPoly::eval(const Assignment& point) const
{
    std::vector<Rational> values;
    values.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = point.find(v);
        if (it == point.end()) {
            // Variables that never occur need no value.
            if (degree_in(values.size()) != 0)
                throw MissingAssignment(v);
            values.emplace_back(0);
        } else {
            values.push_back(it->second);
        }
    }
    Rational sum;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                t *= values[i].pow(static_cast<int>(e[i]));
        sum += t;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(std::string_view name, const Rational& value) const
{
    const std::size_t idx = var_index(name);
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f[idx] = 0;
        out.add_term(f, c * value.pow(static_cast<int>(e[idx])));
    }
    return out;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::string_view name) const
{
    const std::size_t idx = var_index(name);
    std::vector<MultiPoly> out(degree_in(idx) + 1, MultiPoly(vars_));
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f[idx] = 0;
        out[e[idx]].add_term(f, c);
    }
    return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const
{
    MultiPoly result = constant(vars_, 1);
    MultiPoly base = *this;
    while (exponent != 0) {
        if (exponent & 1u)
            result = result * base;
        exponent >>= 1;
        if (exponent != 0)
            base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

void MultiPoly::adopt_vars(const MultiPoly& o)
{
    if (vars_ == o.vars_)
        return;
    if (vars_.empty() && is_constant()) {
        Rational k = terms_.empty() ? Rational(0) : terms_.begin()->second;
        *this = constant(o.vars_, k);
        return;
    }
    if (o.vars_.empty() && o.is_constant())
        return;
    throw std::invalid_argument("polynomials over different variable lists");
}

namespace {

// Lifts a variable-free constant onto `vars` so binary ops can proceed.
const MultiPoly& lifted(const MultiPoly& p, const std::vector<std::string>& vars, MultiPoly& storage)
{
    if (p.vars() == vars || !p.vars().empty())
        return p;
    storage = MultiPoly::constant(vars, p.is_zero() ? Rational(0) : p.terms().begin()->second);
    return storage;
}

} // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    adopt_vars(o);
    MultiPoly tmp;
    for (const auto& [e, c] : lifted(o, vars_, tmp).terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    adopt_vars(o);
    MultiPoly tmp;
    for (const auto& [e, c] : lifted(o, vars_, tmp).terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& k)
{
    if (k.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= k;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    MultiPoly lhs = a;
    lhs.adopt_vars(b);
    MultiPoly tmp;
    const MultiPoly& rhs = lifted(b, lhs.vars_, tmp);

    MultiPoly out(lhs.vars_);
    const std::size_t n = lhs.vars_.size();
    Exponents e(n);
    mpq_class prod;
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < n; ++i)
                e[i] = ea[i] + eb[i];
            auto [it, inserted] = out.terms_.try_emplace(e);
            if (inserted) {
                it->second = ca * cb;
            } else {
                it->second += ca * cb;
            }
        }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b)
{
    if (a.vars_ == b.vars_)
        return a.terms_ == b.terms_;
    // A variable-free constant equals the same constant over any variables.
    if ((a.vars_.empty() && a.is_constant()) || (b.vars_.empty() && b.is_constant())) {
        if (a.terms_.size() != b.terms_.size() || !a.is_constant() || !b.is_constant())
            return false;
        return a.terms_.empty() || a.terms_.begin()->second == b.terms_.begin()->second;
    }
    return false;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool is_const = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
        Rational mag = c.abs();
        if (c.sign() < 0)
            os << (first ? "-" : " - ");
        else if (!first)
            os << " + ";
        bool wrote = false;
        if (is_const || mag != Rational(1)) {
            os << mag;
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (wrote)
                os << '*';
            os << vars_[i];
            if (e[i] > 1)
                os << '^' << e[i];
            wrote = true;
        }
        first = false;
    }
    return os.str();
}

std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& d)
{
    if (d.is_zero())
        throw ZeroDenominator("polynomial division by zero");
    MultiPoly rem = a;
    MultiPoly tmp;
    const MultiPoly& div = lifted(d, rem.vars().empty() ? d.vars() : rem.vars(), tmp);
    if (rem.vars().empty() && !div.vars().empty())
        rem = MultiPoly::constant(div.vars(), rem.is_zero() ? Rational(0) : rem.terms().begin()->second);
    MultiPoly quot(rem.vars());
    const auto& [ld, lc] = div.leading();
    const std::size_t n = ld.size();
    while (!rem.is_zero()) {
        const auto& [lr, rc] = rem.leading();
        Exponents q(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (lr[i] < ld[i])
                return std::nullopt;
            q[i] = lr[i] - ld[i];
        }
        MultiPoly step(rem.vars());
        step.add_term(q, rc / lc);
        quot += step;
        rem -= step * div;
    }
    return quot;
}

CompiledPoly::CompiledPoly(const MultiPoly& p)
{
    const std::size_t n = p.vars().size();
    max_deg_.assign(n, 0);
    BigInt lcm_den = 1;
    for (const auto& [e, c] : p.terms()) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
        for (std::size_t i = 0; i < n; ++i)
            max_deg_[i] = std::max(max_deg_[i], e[i]);
    }
    for (const auto& [e, c] : p.terms()) {
        BigInt k = c.num() * (lcm_den / c.den());
        terms_.push_back({e, k});
    }
    scale_ = Rational(BigInt(1), lcm_den);
}

Rational CompiledPoly::eval(std::span<const Rational> values) const
{
    const std::size_t n = max_deg_.size();
    if (values.size() != n)
        throw std::invalid_argument("CompiledPoly::eval: wrong number of values");
    // num_pow[i][k] = p_i^k, den_pow[i][k] = q_i^k
    std::vector<std::vector<BigInt>> num_pow(n), den_pow(n);
    for (std::size_t i = 0; i < n; ++i) {
        num_pow[i].resize(max_deg_[i] + 1);
        den_pow[i].resize(max_deg_[i] + 1);
        num_pow[i][0] = 1;
        den_pow[i][0] = 1;
        for (unsigned k = 1; k <= max_deg_[i]; ++k) {
            num_pow[i][k] = num_pow[i][k - 1] * values[i].num();
            den_pow[i][k] = den_pow[i][k - 1] * values[i].den();
        }
    }
    BigInt sum = 0;
    BigInt t;
    for (const auto& term : terms_) {
        t = term.coeff;
        for (std::size_t i = 0; i < n; ++i) {
            const unsigned e = term.exps[i];
            if (e != 0)
                t *= num_pow[i][e];
            if (e != max_deg_[i])
                t *= den_pow[i][max_deg_[i] - e];
        }
        sum += t;
    }
    BigInt den = 1;
    for (std::size_t i = 0; i < n; ++i)
        den *= den_pow[i][max_deg_[i]];
    return Rational(sum, den) * scale_;
}

RationalFunction::RationalFunction(MultiPoly num)
    : RationalFunction(num, MultiPoly::constant(num.vars(), 1))
{
}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw ZeroDenominator("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize()
{
    if (num_.vars() != den_.vars()) {
        if (num_.vars().empty())
            num_ = MultiPoly::constant(den_.vars(), 0) + num_;
        else if (den_.vars().empty())
            den_ = MultiPoly::constant(num_.vars(), 0) + den_;
        else
            throw std::invalid_argument("numerator and denominator over different variables");
    }
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(den_.vars(), 1);
        return;
    }
    BigInt lcm_den = 1;
    for (const MultiPoly* p : {&num_, &den_})
        for (const auto& [e, c] : p->terms())
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
    num_ *= Rational(lcm_den);
    den_ *= Rational(lcm_den);
    BigInt g = 0;
    for (const MultiPoly* p : {&num_, &den_})
        for (const auto& [e, c] : p->terms())
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
    Rational k(BigInt(den_.leading().second.sign() < 0 ? -1 : 1), g);
    num_ *= k;
    den_ *= k;
}

Rational RationalFunction::eval(const Assignment& point) const
{
    Rational d = den_.eval(point);
    if (d.is_zero())
        throw ZeroDenominator("denominator vanishes at evaluation point");
    return num_.eval(point) / d;
}

RationalFunction RationalFunction::substitute(std::string_view name, const Rational& value) const
{
    return RationalFunction(num_.substitute(name, value), den_.substitute(name, value));
}

RationalFunction RationalFunction::pow(int exponent) const
{
    if (exponent < 0)
        return RationalFunction(den_, num_).pow(-exponent);
    return RationalFunction(num_.pow(static_cast<unsigned>(exponent)), den_.pow(static_cast<unsigned>(exponent)));
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

namespace {

// Combines f and g over a shared denominator, avoiding the full product when
// one denominator divides the other.
RationalFunction combine(const RationalFunction& f, const RationalFunction& g, bool subtract)
{
    auto sum = [&](const MultiPoly& a, const MultiPoly& b) { return subtract ? a - b : a + b; };
    if (f.den() == g.den())
        return RationalFunction(sum(f.num(), g.num()), f.den());
    if (f.den().size() <= g.den().size()) {
        if (auto q = try_divide(g.den(), f.den()))
            return RationalFunction(sum(f.num() * *q, g.num()), g.den());
    } else {
        if (auto q = try_divide(f.den(), g.den()))
            return RationalFunction(sum(f.num(), g.num() * *q), f.den());
    }
    return RationalFunction(sum(f.num() * g.den(), g.num() * f.den()), f.den() * g.den());
}

} // namespace

RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) { return combine(f, g, false); }

RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) { return combine(f, g, true); }

RationalFunction operator*(const RationalFunction& f, const RationalFunction& g)
{
    if (f.is_zero() || g.is_zero())
        return RationalFunction(MultiPoly::constant(f.num().vars(), 0));
    if (f.den().is_constant())
        return RationalFunction(f.num() * g.num(), f.den() * g.den());
    if (auto q = try_divide(f.den(), g.num()))
        return RationalFunction(f.num(), *q * g.den());
    return RationalFunction(f.num() * g.num(), f.den() * g.den());
}

RationalFunction operator/(const RationalFunction& f, const RationalFunction& g)
{
    if (g.is_zero())
        throw ZeroDenominator("division by the zero rational function");
    if (auto q = try_divide(f.den(), g.den()))
        return RationalFunction(f.num(), *q * g.num());
    return RationalFunction(f.num() * g.den(), f.den() * g.num());
}

RationalFunction operator*(const Rational& k, const RationalFunction& f)
{
    return RationalFunction(f.num() * k, f.den());
}

std::string RationalFunction::to_string() const
{
    if (den_.is_constant() && den_.leading().second == Rational(1))
        return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

bool ratfun_equal(const RationalFunction& f, const RationalFunction& g)
{
    return f.num() * g.den() == g.num() * f.den();
}

Rational poly_eval(const MultiPoly& p, const Assignment& point) { return p.eval(point); }

} // namespace cuboid
