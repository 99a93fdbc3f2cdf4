#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "cuboid/errors.hpp"
#include "cuboid/scan.hpp"
#include "support.hpp"

using namespace cuboid;
using cuboid::testing::q;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "cuboid_test_scan";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    fs::remove(p);
    fs::remove(checkpoint_path(p));
    return p;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

long totient(long n)
{
    long count = 0;
    for (long k = 1; k <= n; ++k)
        count += std::gcd(k, n) == 1;
    return count;
}

ScanConfig config(unsigned h, const fs::path& out)
{
    ScanConfig cfg;
    cfg.max_height = h;
    cfg.out = out;
    cfg.checkpoint_interval = 17;
    return cfg;
}

} // namespace

TEST_CASE("rationals of bounded height")
{
    CHECK(rationals_up_to_height(1) == std::vector<Rational>{q(-1), q(0), q(1)});
    CHECK(rationals_up_to_height(2) == std::vector<Rational>{q(-1), q(0), q(1), q(-2), q(-1, 2), q(1, 2), q(2)});
    for (unsigned n : {3u, 7u, 16u}) {
        long expected = 3;
        for (long h = 2; h <= static_cast<long>(n); ++h)
            expected += 4 * totient(h);
        const auto rs = rationals_up_to_height(n);
        CHECK(static_cast<long>(rs.size()) == expected);
        CHECK(std::set<Rational>(rs.begin(), rs.end()).size() == rs.size());
        CHECK(std::all_of(rs.begin(), rs.end(), [&](const Rational& r) { return r.height() <= n; }));
    }
}

TEST_CASE("scan points are ordered by height and nest across bounds")
{
    CHECK(scan_points(1).size() == 9);
    CHECK(scan_points(2).size() == 49);
    const auto small = scan_points(4);
    const auto large = scan_points(6);
    REQUIRE(large.size() > small.size());
    CHECK(std::equal(small.begin(), small.end(), large.begin()));
    unsigned long prev = 0;
    for (const ParamPoint& p : large) {
        const unsigned long h = std::max(p.b.height(), p.c.height()).get_ui();
        CHECK(h >= prev);
        prev = h;
    }
}

TEST_CASE("classify examples")
{
    const ScanRecord b0 = classify_point({q(0), q(5)});
    CHECK(b0.status == ScanStatus::Case);
    CHECK(b0.cases == std::vector<CaseId>{CaseId::BZero});
    CHECK(b0.x_factors == "x^2 (x-1)");
    CHECK(b0.d_factors == "d (d-1)(d+1)");
    CHECK(b0.verified);
    CHECK(!b0.perfect);

    const ScanRecord s = classify_point({q(14, 5), q(-7, 2)});
    CHECK(status_string(s) == "sporadic_reducible");
    CHECK(s.x_factors == "1/157216 (17 x+15)(9248 x^2+3128 x-495)");
    CHECK(s.d_factors == "1/157216 (17 d+8)(9248 d^2-952 d-8175)");
    CHECK(s.roots_x == std::vector<Rational>{q(-15, 17)});
    CHECK(s.roots_d == std::vector<Rational>{q(-8, 17)});
    CHECK(!s.verified);

    const ScanRecord gf = classify_point({q(1), q(2)});
    CHECK(status_string(gf) == "guard_fail:2");
    CHECK(!gf.x_factors);
    CHECK(status_string(classify_point({q(0), q(0)})) == "guard_fail:1");
}

TEST_CASE("records round-trip through JSON")
{
    for (const ParamPoint& p : scan_points(4)) {
        const ScanRecord r = classify_point(p);
        const std::string line = to_json_line(r);
        CHECK(from_json_line(line) == r);
        CHECK(line.find('\n') == std::string::npos);
    }
    const std::string line = to_json_line(classify_point({q(0), q(5)}));
    CHECK(line.rfind(R"j({"b":"0","c":"5","status":"case","cases":["b0"],"x_factors":"x^2 (x-1)")j", 0) == 0);
    CHECK_THROWS_AS(from_json_line("{"), ParseError);
    CHECK_THROWS_AS(from_json_line(R"({"b":"0"})"), ParseError);
}

TEST_CASE("record invariants and case cross-validation")
{
    for (const ParamPoint& p : scan_points(7)) {
        const ScanRecord r = classify_point(p);
        INFO(p.b << " " << p.c);
        if (r.perfect)
            CHECK(r.verified);
        if (r.status == ScanStatus::SporadicReducible)
            CHECK((r.cases.empty() && (!r.roots_x.empty() || !r.roots_d.empty())));
        if (r.status == ScanStatus::Irreducible)
            CHECK((r.roots_x.empty() && r.roots_d.empty()));
        const auto problem = cross_validate(r);
        CHECK(!problem.has_value());
    }
}

TEST_CASE("small scans enumerate every point")
{
    const fs::path out = scratch("h1.jsonl");
    const ScanSummary s = run_scan(config(1, out));
    CHECK(s.total == 9);
    CHECK(read_records(out).size() == 9);
    CHECK(summarize(read_records(out)).perfect_points.empty());
    const fs::path out2 = scratch("h2.jsonl");
    CHECK(run_scan(config(2, out2)).total == 49);
}

TEST_CASE("scans are deterministic across runs, thread counts and resumes")
{
    const fs::path a = scratch("a.jsonl");
    const fs::path b = scratch("b.jsonl");
    const fs::path c = scratch("c.jsonl");
    ScanConfig ca = config(5, a);
    ca.threads = 1;
    run_scan(ca);
    ScanConfig cb = config(5, b);
    cb.threads = 4;
    run_scan(cb);
    CHECK(slurp(a) == slurp(b));

    ScanConfig cc = config(5, c);
    cc.stop_after = 200;
    run_scan(cc);
    CHECK(slurp(c).size() < slurp(a).size());
    cc.stop_after = 333;
    cc.resume = true;
    run_scan(cc);
    cc.stop_after.reset();
    run_scan(cc);
    CHECK(slurp(c) == slurp(a));

    // Resuming a finished scan changes nothing.
    run_scan(cc);
    CHECK(slurp(c) == slurp(a));
}

TEST_CASE("resume refuses a checkpoint from another configuration")
{
    const fs::path out = scratch("mismatch.jsonl");
    ScanConfig cfg = config(3, out);
    cfg.stop_after = 20;
    run_scan(cfg);
    ScanConfig other = config(4, out);
    other.resume = true;
    CHECK_THROWS_AS(run_scan(other), ConfigMismatch);
}

TEST_CASE("shards partition the unsharded run")
{
    const fs::path full = scratch("full.jsonl");
    run_scan(config(4, full));
    const auto all = read_records(full);
    std::vector<std::string> merged;
    for (unsigned i = 0; i < 3; ++i) {
        const fs::path part = scratch("part" + std::to_string(i) + ".jsonl");
        ScanConfig cfg = config(4, part);
        cfg.shard = {{i, 3}};
        run_scan(cfg);
        for (const ScanRecord& r : read_records(part))
            merged.push_back(to_json_line(r));
    }
    std::vector<std::string> expected;
    for (const ScanRecord& r : all)
        expected.push_back(to_json_line(r));
    std::sort(merged.begin(), merged.end());
    std::sort(expected.begin(), expected.end());
    CHECK(merged == expected);
}

TEST_CASE("config validation and I/O errors")
{
    ScanConfig bad = config(0, scratch("bad.jsonl"));
    CHECK_THROWS_AS(run_scan(bad), std::invalid_argument);
    ScanConfig shard = config(2, scratch("bad.jsonl"));
    shard.shard = {{3, 3}};
    CHECK_THROWS_AS(run_scan(shard), std::invalid_argument);
    CHECK_THROWS_AS(run_scan(config(1, "/nonexistent-dir/x.jsonl")), IoFailure);
    CHECK_THROWS_AS(read_records("/nonexistent-dir/x.jsonl"), IoFailure);
}

TEST_CASE("summaries")
{
    const ScanSummary empty = summarize({});
    CHECK(empty.total == 0);
    CHECK(empty.sporadic_points.empty());
    CHECK(empty.perfect_points.empty());

    std::vector<ScanRecord> rs;
    for (const ParamPoint& p : scan_points(1))
        rs.push_back(classify_point(p));
    rs.push_back(classify_point({q(14, 5), q(-7, 2)}));
    const ScanSummary s = summarize(rs);
    CHECK(s.total == 10);
    CHECK(s.guard_fail + s.cases + s.sporadic + s.irreducible == s.total);
    CHECK(s.sporadic_points.back() == ParamPoint{q(14, 5), q(-7, 2)});
    CHECK(s.perfect_points.empty());
    CHECK(format_summary(s).find("sporadic b=14/5 c=-7/2") != std::string::npos);
}
