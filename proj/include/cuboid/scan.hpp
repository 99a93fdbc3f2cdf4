#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuboid/cases.hpp"
#include "cuboid/coefficients.hpp"

namespace cuboid {

/// All rationals of height <= max_height, ordered by height, then
/// numerator, then denominator.
std::vector<Rational> rationals_up_to_height(unsigned max_height);

/// Points with max(height(b), height(c)) <= max_height. Ordered by that
/// point height first, then b, then c, each in the order of
/// rationals_up_to_height. A run to N is therefore a prefix of a run to N+1.
std::vector<ParamPoint> scan_points(unsigned max_height);

enum class ScanStatus { GuardFail, Case, SporadicReducible, Irreducible };

struct ScanRecord {
    ParamPoint point;
    ScanStatus status = ScanStatus::Irreducible;
    int guard_factor = 0;
    std::vector<CaseId> cases;
    /// Factor strings of cubics that have a rational root.
    std::optional<std::string> x_factors, d_factors;
    /// Rational roots with multiplicity, ascending.
    std::vector<Rational> roots_x, roots_d;
    bool perfect = false;
    bool verified = false;

    friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

/// "guard_fail:k", "case", "sporadic_reducible" or "irreducible".
std::string status_string(const ScanRecord& r);

ScanRecord classify_point(const ParamPoint& p);

/// One JSON object, no trailing newline. Keys in the order b, c, status,
/// cases, x_factors, d_factors, roots_x, roots_d, perfect, verified.
std::string to_json_line(const ScanRecord& r);
/// Throws ParseError on malformed input.
ScanRecord from_json_line(const std::string& line);

std::vector<ScanRecord> read_records(const std::filesystem::path& path);

/// For a record with cases, checks every case against its generator: each
/// rational parameter that induces the point must reproduce the record's
/// root multisets, and such a parameter must exist exactly when both
/// cubics split. Returns a description of the first disagreement.
std::optional<std::string> cross_validate(const ScanRecord& r);

struct ScanConfig {
    unsigned max_height = 1;
    /// (index, count) with index < count.
    std::optional<std::pair<unsigned, unsigned>> shard;
    std::filesystem::path out;
    std::size_t checkpoint_interval = 1000;
    bool resume = false;
    /// 0 picks the hardware concurrency.
    unsigned threads = 0;
    /// Stops after this many records without a final checkpoint, leaving
    /// the files as an interrupted run would.
    std::optional<std::size_t> stop_after;

    void validate() const;
    std::string describe() const;
};

std::uint64_t config_hash(const ScanConfig& cfg);

std::filesystem::path checkpoint_path(const std::filesystem::path& out);

struct ScanSummary {
    std::size_t total = 0;
    std::size_t guard_fail = 0;
    std::size_t cases = 0;
    std::size_t sporadic = 0;
    std::size_t irreducible = 0;
    std::size_t verified = 0;
    std::array<std::size_t, 3> guard_by_factor{};
    std::map<CaseId, std::size_t> by_case;
    std::vector<ParamPoint> sporadic_points;
    std::vector<ParamPoint> perfect_points;
};

ScanSummary summarize(const std::vector<ScanRecord>& records);
std::string format_summary(const ScanSummary& s);

/// Runs or resumes a scan and returns the summary of the whole output file.
/// Throws IoFailure, ConfigMismatch.
ScanSummary run_scan(const ScanConfig& cfg);

} // namespace cuboid
