// cuboid: command-line front end for the parametric cuboid cubics.
//
// Exit codes: 0 success, 1 identity failure, 2 parse, 3 guard,
// 4 domain restriction, 5 I/O.

#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <optional>
#include <string>

#include "cuboid/cases.hpp"
#include "cuboid/coefficients.hpp"
#include "cuboid/cubic.hpp"
#include "cuboid/errors.hpp"
#include "cuboid/identities.hpp"
#include "cuboid/scan.hpp"

using namespace cuboid;

namespace {

enum Exit { kOk = 0, kIdentityFail = 1, kParse = 2, kGuard = 3, kDomain = 4, kIo = 5 };

std::string join(const auto& values)
{
    std::string s;
    for (const auto& v : values) {
        if (!s.empty())
            s += ", ";
        s += v.to_string();
    }
    return s;
}

std::pair<unsigned, unsigned> parse_shard(const std::string& text)
{
    const auto slash = text.find('/');
    unsigned i = 0, n = 0;
    auto num = [](std::string_view s, unsigned& out) {
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return !s.empty() && ec == std::errc() && p == s.data() + s.size();
    };
    if (slash == std::string::npos || !num(std::string_view(text).substr(0, slash), i) ||
        !num(std::string_view(text).substr(slash + 1), n) || n == 0 || i >= n)
        throw ParseError("shard must be i/n with i < n: " + text);
    return {i, n};
}

int cmd_eval(const std::string& b, const std::string& c)
{
    const CoefficientSet cs = coefficients_at({Rational::parse(b), Rational::parse(c)});
    for (std::string_view name : kCoefficientNames)
        std::cout << name << " = " << cs.get(name) << "\n";
    return kOk;
}

void print_factorization(const FactorizationResult& f, char var)
{
    std::cout << var << " = " << format_factorization(f, var) << "\n";
    const std::string roots = join(f.root_list());
    std::cout << var << " roots =" << (roots.empty() ? "" : " " + roots) << "\n";
    for (const Factor& fac : f.factors)
        if (fac.irreducible)
            std::cout << var << " irreducible: " << format_poly(fac.poly, var) << "\n";
}

int cmd_factor(const std::string& b, const std::string& c, const std::string& which)
{
    const CoefficientSet cs = coefficients_at({Rational::parse(b), Rational::parse(c)});
    if (which != "d")
        print_factorization(factor_over_q(CubicPoly::from_symmetric(cs.e10, cs.e20, cs.e30)), 'x');
    if (which != "x")
        print_factorization(factor_over_q(CubicPoly::from_symmetric(cs.e01, cs.e02, cs.e03)), 'd');
    return kOk;
}

int cmd_case(const std::string& name, const std::optional<std::string>& param)
{
    const auto id = parse_case(name);
    if (!id)
        throw ParseError("unknown case: " + name);
    std::optional<Rational> t;
    if (param)
        t = Rational::parse(*param);
    else if (*id != CaseId::BZero)
        throw ParseError("case " + name + " needs --param");
    const CaseReport r = generate_case(*id, t);

    auto flag = [](bool v) { return v ? "true" : "false"; };
    std::cout << "case = " << case_name(r.id) << "\n";
    if (r.parameter)
        std::cout << "param = " << *r.parameter << "\n";
    std::cout << "b = " << r.point.b << "\n" << "c = " << r.point.c << "\n";
    std::string cases;
    for (CaseId other : r.cases)
        cases += (cases.empty() ? "" : ", ") + std::string(case_name(other));
    std::cout << "cases = " << cases << "\n";
    std::cout << "x = " << join(r.roots.x) << "\n" << "d = " << join(r.roots.d) << "\n";
    std::cout << "e21 = " << r.mixed.e21 << "\n" << "e11 = " << r.mixed.e11 << "\n" << "e12 = " << r.mixed.e12 << "\n";
    std::cout << "cuboid = " << flag(r.cuboid_ok) << "\n"
              << "auxiliary = " << flag(r.aux_ok) << "\n"
              << "vieta = " << flag(r.vieta_ok) << "\n"
              << "perfect = " << flag(r.perfect) << "\n";
    for (const std::string& m : r.printed_mismatches)
        std::cout << "printed_mismatch = " << m << "\n";
    return kOk;
}

int cmd_verify(const std::optional<std::string>& corrupt)
{
    bool all = true;
    for (const IdentityResult& r : run_identity_suite({corrupt})) {
        std::cout << r.name << ": " << (r.pass ? "PASS" : "FAIL");
        if (!r.pass)
            std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        all = all && r.pass;
    }
    return all ? kOk : kIdentityFail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact factorization and search tools for the parametric cuboid cubics"};
    app.require_subcommand(1);

    std::string b, c, which = "both", name, out, in, shard;
    std::optional<std::string> param, corrupt;
    unsigned max_height = 1, threads = 0;
    std::size_t interval = 1000, stop_after = 0;
    bool resume = false;

    auto* eval = app.add_subcommand("eval", "Print the nine coefficient values at (b, c)");
    eval->add_option("--b", b, "b as p/q")->required();
    eval->add_option("--c", c, "c as p/q")->required();

    auto* factor = app.add_subcommand("factor", "Factor the edge and diagonal cubics over Q");
    factor->add_option("--b", b, "b as p/q")->required();
    factor->add_option("--c", c, "c as p/q")->required();
    factor->add_option("--which", which, "x, d or both")->check(CLI::IsMember({"x", "d", "both"}));

    auto* kase = app.add_subcommand("case", "Generate roots for one reducibility case");
    kase->add_option("--name", name, "b0, c0, c1, c2, cond62 or cond63")->required();
    kase->add_option("--param", param, "t for c0/c1/c2, c for cond62/cond63 and b0");

    auto* verify = app.add_subcommand("verify-identities", "Run the symbolic identity suite");
    verify->add_option("--corrupt", corrupt)->group("");

    auto* scan = app.add_subcommand("scan", "Classify all points up to a height bound");
    scan->add_option("--max-height", max_height, "height bound")->required()->check(CLI::PositiveNumber);
    scan->add_option("--out", out, "output JSONL path")->required();
    scan->add_flag("--resume", resume, "continue from the checkpoint next to --out");
    scan->add_option("--shard", shard, "i/n: take points whose index is i mod n");
    scan->add_option("--checkpoint-interval", interval, "records between checkpoints")->check(CLI::PositiveNumber);
    scan->add_option("--threads", threads, "worker threads, 0 for all cores");
    scan->add_option("--stop-after", stop_after)->group("");

    auto* summ = app.add_subcommand("summarize", "Summarize a scan output file");
    summ->add_option("--in", in, "JSONL path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kParse;
    }

    try {
        if (*eval)
            return cmd_eval(b, c);
        if (*factor)
            return cmd_factor(b, c, which);
        if (*kase)
            return cmd_case(name, param);
        if (*verify)
            return cmd_verify(corrupt);
        if (*scan) {
            ScanConfig cfg;
            cfg.max_height = max_height;
            cfg.out = out;
            cfg.resume = resume;
            cfg.checkpoint_interval = interval;
            cfg.threads = threads;
            if (!shard.empty())
                cfg.shard = parse_shard(shard);
            if (stop_after)
                cfg.stop_after = stop_after;
            std::cerr << format_summary(run_scan(cfg));
            return kOk;
        }
        if (*summ) {
            std::cout << format_summary(summarize(read_records(in)));
            return kOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const GuardViolation& e) {
        std::cerr << "error: guard factor " << e.factor() << " (" << guard_factor_name(e.factor())
                  << ") vanishes at b=" << e.point().b << ", c=" << e.point().c << "\n";
        return kGuard;
    } catch (const DomainRestriction& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const ConfigMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    }
    return kOk;
}
