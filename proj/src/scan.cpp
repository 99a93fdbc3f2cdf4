#include "cuboid/scan.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cuboid/cubic.hpp"
#include "cuboid/errors.hpp"
#include "cuboid/verify.hpp"

namespace cuboid {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::vector<Rational> rationals_up_to_height(unsigned max_height)
{
    struct Entry {
        long h, p, q;
    };
    std::vector<Entry> es;
    const long n = max_height;
    for (long q = 1; q <= n; ++q)
        for (long p = -n; p <= n; ++p)
            if (std::gcd(p, q) == 1 || (p == 0 && q == 1))
                es.push_back({std::max(std::labs(p), q), p, q});
    std::sort(es.begin(), es.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.h, a.p, a.q) < std::tie(b.h, b.p, b.q);
    });
    std::vector<Rational> out;
    out.reserve(es.size());
    for (const Entry& e : es)
        out.emplace_back(BigInt(e.p), BigInt(e.q));
    return out;
}

std::vector<ParamPoint> scan_points(unsigned max_height)
{
    const std::vector<Rational> rs = rationals_up_to_height(max_height);
    std::vector<unsigned long> hs;
    hs.reserve(rs.size());
    for (const Rational& r : rs)
        hs.push_back(r.height().get_ui());

    std::vector<ParamPoint> out;
    out.reserve(rs.size() * rs.size());
    std::size_t limit = 0;
    for (unsigned long h = 1; h <= max_height; ++h) {
        while (limit < rs.size() && hs[limit] <= h)
            ++limit;
        for (std::size_t i = 0; i < limit; ++i)
            for (std::size_t j = 0; j < limit; ++j)
                if (std::max(hs[i], hs[j]) == h)
                    out.push_back({rs[i], rs[j]});
    }
    return out;
}

std::string status_string(const ScanRecord& r)
{
    switch (r.status) {
    case ScanStatus::GuardFail: return "guard_fail:" + std::to_string(r.guard_factor);
    case ScanStatus::Case: return "case";
    case ScanStatus::SporadicReducible: return "sporadic_reducible";
    case ScanStatus::Irreducible: return "irreducible";
    }
    return "?";
}

ScanRecord classify_point(const ParamPoint& p)
{
    ScanRecord r;
    r.point = p;
    r.cases = detect_cases(p);
    const GuardFactors g = guard_factors(p);
    if (int k = g.first_vanishing(); k != 0) {
        r.status = ScanStatus::GuardFail;
        r.guard_factor = k;
        return r;
    }

    const CoefficientSet cs = coefficients_at(p);
    const FactorizationResult fx = factor_over_q(CubicPoly::from_symmetric(cs.e10, cs.e20, cs.e30));
    const FactorizationResult fd = factor_over_q(CubicPoly::from_symmetric(cs.e01, cs.e02, cs.e03));
    r.roots_x = fx.root_list();
    r.roots_d = fd.root_list();
    if (!r.roots_x.empty())
        r.x_factors = format_factorization(fx, 'x');
    if (!r.roots_d.empty())
        r.d_factors = format_factorization(fd, 'd');

    if (!r.cases.empty())
        r.status = ScanStatus::Case;
    else if (r.x_factors || r.d_factors)
        r.status = ScanStatus::SporadicReducible;
    else
        r.status = ScanStatus::Irreducible;

    if (fx.splits_completely() && fd.splits_completely()) {
        const std::array<Rational, 3> x = {r.roots_x[0], r.roots_x[1], r.roots_x[2]};
        const std::array<Rational, 3> d = {r.roots_d[0], r.roots_d[1], r.roots_d[2]};
        if (auto pairing = find_consistent_pairing(x, d, cs)) {
            r.verified = true;
            r.perfect = is_perfect(*pairing);
        }
    }
    return r;
}

namespace {

json rational_list(const std::vector<Rational>& v)
{
    json a = json::array();
    for (const Rational& q : v)
        a.push_back(q.to_string());
    return a;
}

json optional_string(const std::optional<std::string>& s)
{
    return s ? json(*s) : json(nullptr);
}

} // namespace

std::string to_json_line(const ScanRecord& r)
{
    json j;
    j["b"] = r.point.b.to_string();
    j["c"] = r.point.c.to_string();
    j["status"] = status_string(r);
    json cases = json::array();
    for (CaseId id : r.cases)
        cases.push_back(std::string(case_name(id)));
    j["cases"] = std::move(cases);
    j["x_factors"] = optional_string(r.x_factors);
    j["d_factors"] = optional_string(r.d_factors);
    j["roots_x"] = rational_list(r.roots_x);
    j["roots_d"] = rational_list(r.roots_d);
    j["perfect"] = r.perfect;
    j["verified"] = r.verified;
    return j.dump();
}

ScanRecord from_json_line(const std::string& line)
{
    try {
        const json j = json::parse(line);
        ScanRecord r;
        r.point = {Rational::parse(j.at("b").get<std::string>()), Rational::parse(j.at("c").get<std::string>())};
        const std::string status = j.at("status").get<std::string>();
        if (status.rfind("guard_fail:", 0) == 0) {
            r.status = ScanStatus::GuardFail;
            r.guard_factor = std::stoi(status.substr(11));
            if (r.guard_factor < 1 || r.guard_factor > 3)
                throw ParseError("bad guard factor in status: " + status);
        } else if (status == "case") {
            r.status = ScanStatus::Case;
        } else if (status == "sporadic_reducible") {
            r.status = ScanStatus::SporadicReducible;
        } else if (status == "irreducible") {
            r.status = ScanStatus::Irreducible;
        } else {
            throw ParseError("unknown status: " + status);
        }
        for (const auto& c : j.at("cases")) {
            auto id = parse_case(c.get<std::string>());
            if (!id)
                throw ParseError("unknown case: " + c.get<std::string>());
            r.cases.push_back(*id);
        }
        for (const char* key : {"x_factors", "d_factors"}) {
            const json& v = j.at(key);
            std::optional<std::string> s;
            if (!v.is_null())
                s = v.get<std::string>();
            (key[0] == 'x' ? r.x_factors : r.d_factors) = std::move(s);
        }
        for (const auto& q : j.at("roots_x"))
            r.roots_x.push_back(Rational::parse(q.get<std::string>()));
        for (const auto& q : j.at("roots_d"))
            r.roots_d.push_back(Rational::parse(q.get<std::string>()));
        r.perfect = j.at("perfect").get<bool>();
        r.verified = j.at("verified").get<bool>();
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad record: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad record: ") + e.what());
    }
}

std::vector<ScanRecord> read_records(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoFailure("cannot open " + path.string());
    std::vector<ScanRecord> out;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty())
            out.push_back(from_json_line(line));
    if (in.bad())
        throw IoFailure("read error on " + path.string());
    return out;
}

std::optional<std::string> cross_validate(const ScanRecord& r)
{
    if (r.status != ScanStatus::Case)
        return std::nullopt;
    const bool split = r.roots_x.size() == 3 && r.roots_d.size() == 3;
    for (CaseId id : r.cases) {
        const std::vector<Rational> params = case_parameters_for(id, r.point);
        const std::string tag(case_name(id));
        if (params.empty() == split)
            return tag + (split ? ": cubics split but no parameter induces the point"
                                : ": a parameter induces the point but the cubics do not split");
        for (const Rational& t : params) {
            const CaseReport rep = generate_case(id, t);
            if (!(rep.point == r.point))
                return tag + ": parameter " + t.to_string() + " induces a different point";
            std::vector<Rational> x(rep.roots.x.begin(), rep.roots.x.end());
            std::vector<Rational> d(rep.roots.d.begin(), rep.roots.d.end());
            std::sort(x.begin(), x.end());
            std::sort(d.begin(), d.end());
            if (x != r.roots_x || d != r.roots_d)
                return tag + ": roots at parameter " + t.to_string() + " differ from the record";
        }
    }
    return std::nullopt;
}

void ScanConfig::validate() const
{
    if (max_height < 1)
        throw std::invalid_argument("max_height must be at least 1");
    if (shard && (shard->second == 0 || shard->first >= shard->second))
        throw std::invalid_argument("shard index must be below shard count");
    if (checkpoint_interval == 0)
        throw std::invalid_argument("checkpoint interval must be positive");
}

std::string ScanConfig::describe() const
{
    std::ostringstream s;
    s << "cuboid-scan v1 max_height=" << max_height;
    if (shard)
        s << " shard=" << shard->first << "/" << shard->second;
    return s.str();
}

std::uint64_t config_hash(const ScanConfig& cfg)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : cfg.describe()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

fs::path checkpoint_path(const fs::path& out)
{
    fs::path p = out;
    p += ".ckpt";
    return p;
}

ScanSummary summarize(const std::vector<ScanRecord>& records)
{
    ScanSummary s;
    for (const ScanRecord& r : records) {
        ++s.total;
        switch (r.status) {
        case ScanStatus::GuardFail:
            ++s.guard_fail;
            ++s.guard_by_factor.at(r.guard_factor - 1);
            break;
        case ScanStatus::Case: ++s.cases; break;
        case ScanStatus::SporadicReducible:
            ++s.sporadic;
            s.sporadic_points.push_back(r.point);
            break;
        case ScanStatus::Irreducible: ++s.irreducible; break;
        }
        if (r.status != ScanStatus::GuardFail)
            for (CaseId id : r.cases)
                ++s.by_case[id];
        if (r.verified)
            ++s.verified;
        if (r.perfect)
            s.perfect_points.push_back(r.point);
    }
    return s;
}

std::string format_summary(const ScanSummary& s)
{
    std::ostringstream o;
    o << "records = " << s.total << "\n";
    o << "guard_fail = " << s.guard_fail << "\n";
    for (int k = 0; k < 3; ++k)
        o << "guard_fail:" << k + 1 << " = " << s.guard_by_factor[k] << "\n";
    o << "case = " << s.cases << "\n";
    for (CaseId id : kAllCases) {
        auto it = s.by_case.find(id);
        o << "case:" << case_name(id) << " = " << (it == s.by_case.end() ? 0 : it->second) << "\n";
    }
    o << "sporadic_reducible = " << s.sporadic << "\n";
    o << "irreducible = " << s.irreducible << "\n";
    o << "verified = " << s.verified << "\n";
    for (const ParamPoint& p : s.sporadic_points)
        o << "sporadic b=" << p.b << " c=" << p.c << "\n";
    o << "perfect = " << s.perfect_points.size() << "\n";
    for (const ParamPoint& p : s.perfect_points)
        o << "perfect b=" << p.b << " c=" << p.c << "\n";
    return o.str();
}

namespace {

struct Checkpoint {
    std::uint64_t hash = 0;
    std::size_t index = 0; // enumeration index of the next point
    std::uintmax_t offset = 0;
    std::string b, c;
    bool complete = false;
};

std::optional<Checkpoint> read_checkpoint(const fs::path& path)
{
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    Checkpoint ck;
    std::string line;
    bool have_hash = false, have_index = false, have_offset = false;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        const std::string key = line.substr(0, eq);
        const std::string val = line.substr(eq + 1);
        try {
            if (key == "config_hash") ck.hash = std::stoull(val, nullptr, 16), have_hash = true;
            else if (key == "index") ck.index = std::stoull(val), have_index = true;
            else if (key == "offset") ck.offset = std::stoull(val), have_offset = true;
            else if (key == "b") ck.b = val;
            else if (key == "c") ck.c = val;
            else if (key == "complete") ck.complete = val == "1";
        } catch (const std::exception&) {
            throw IoFailure("corrupt checkpoint " + path.string());
        }
    }
    if (!have_hash || !have_index || !have_offset)
        throw IoFailure("incomplete checkpoint " + path.string());
    return ck;
}

void write_checkpoint(const fs::path& path, const Checkpoint& ck)
{
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << "config_hash=" << std::hex << ck.hash << std::dec << "\n"
            << "index=" << ck.index << "\n"
            << "offset=" << ck.offset << "\n"
            << "b=" << ck.b << "\n"
            << "c=" << ck.c << "\n"
            << "complete=" << (ck.complete ? 1 : 0) << "\n";
        out.flush();
        if (!out)
            throw IoFailure("cannot write checkpoint " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec)
        throw IoFailure("cannot replace checkpoint " + path.string() + ": " + ec.message());
}

void classify_batch(const std::vector<const ParamPoint*>& batch, std::vector<std::string>& lines, unsigned threads)
{
    lines.assign(batch.size(), {});
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < batch.size();)
            lines[i] = to_json_line(classify_point(*batch[i]));
    };
    if (threads <= 1) {
        work();
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(work);
}

} // namespace

ScanSummary run_scan(const ScanConfig& cfg)
{
    cfg.validate();
    const fs::path ckpath = checkpoint_path(cfg.out);
    const std::uint64_t hash = config_hash(cfg);

    Checkpoint ck;
    ck.hash = hash;
    bool fresh = true;
    if (cfg.resume) {
        if (auto prev = read_checkpoint(ckpath)) {
            if (prev->hash != hash)
                throw ConfigMismatch("checkpoint " + ckpath.string() + " belongs to a different scan configuration");
            std::error_code ec;
            const auto size = fs::file_size(cfg.out, ec);
            if (ec || size < prev->offset)
                throw IoFailure("output " + cfg.out.string() + " is shorter than its checkpoint");
            fs::resize_file(cfg.out, prev->offset, ec);
            if (ec)
                throw IoFailure("cannot truncate " + cfg.out.string() + ": " + ec.message());
            ck = *prev;
            fresh = false;
        }
    }
    if (fresh) {
        std::error_code ec;
        fs::remove(ckpath, ec);
        std::ofstream truncate(cfg.out, std::ios::binary | std::ios::trunc);
        if (!truncate)
            throw IoFailure("cannot open " + cfg.out.string());
    }

    if (!ck.complete) {
        std::ofstream out(cfg.out, std::ios::binary | std::ios::app);
        if (!out)
            throw IoFailure("cannot open " + cfg.out.string());

        const std::vector<ParamPoint> points = scan_points(cfg.max_height);
        const unsigned shard_index = cfg.shard ? cfg.shard->first : 0;
        const unsigned shard_count = cfg.shard ? cfg.shard->second : 1;
        const unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
        const std::size_t batch_size = std::max<std::size_t>(64, 32 * threads);

        std::uintmax_t offset = fs::file_size(cfg.out);
        std::size_t written = 0;
        std::size_t since_checkpoint = 0;
        std::size_t i = ck.index;
        std::vector<const ParamPoint*> batch;
        std::vector<std::size_t> batch_index;
        std::vector<std::string> lines;
        while (i < points.size()) {
            batch.clear();
            batch_index.clear();
            for (; i < points.size() && batch.size() < batch_size; ++i)
                if (i % shard_count == shard_index) {
                    batch.push_back(&points[i]);
                    batch_index.push_back(i);
                }
            classify_batch(batch, lines, threads);
            for (std::size_t k = 0; k < lines.size(); ++k) {
                out << lines[k] << '\n';
                offset += lines[k].size() + 1;
                ++written;
                if (cfg.stop_after && written >= *cfg.stop_after) {
                    out.flush();
                    return summarize(read_records(cfg.out));
                }
                if (++since_checkpoint >= cfg.checkpoint_interval) {
                    out.flush();
                    if (!out)
                        throw IoFailure("write error on " + cfg.out.string());
                    ck.index = batch_index[k] + 1;
                    ck.offset = offset;
                    ck.b = batch[k]->b.to_string();
                    ck.c = batch[k]->c.to_string();
                    write_checkpoint(ckpath, ck);
                    since_checkpoint = 0;
                }
            }
        }
        out.flush();
        if (!out)
            throw IoFailure("write error on " + cfg.out.string());
        if (!batch.empty()) {
            ck.b = batch.back()->b.to_string();
            ck.c = batch.back()->c.to_string();
        }
        ck.index = points.size();
        ck.offset = offset;
        ck.complete = true;
        write_checkpoint(ckpath, ck);
    }
    return summarize(read_records(cfg.out));
}

} // namespace cuboid
