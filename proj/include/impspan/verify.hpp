#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "impspan/spanner.hpp"
#include "impspan/wspd_balls.hpp"

namespace impspan {

// Absolute tolerance for all verification comparisons; 1e-9 unless the
// IMPSPAN_TOLERANCE environment variable overrides it. Inputs are assumed
// to be at unit scale.
double verification_tolerance();

// Margins above the tolerance but below this are reported as warnings.
inline constexpr double kWarnMargin = 1e-6;

struct CheckItem {
    std::string name;
    bool pass = false;
    double margin = 0.0;  // worst-case slack; +infinity when vacuous
    std::string detail;
    double warn_below = kWarnMargin;  // passing margins under this render as WARN
};

struct VerificationReport {
    std::vector<CheckItem> checks;

    bool all_pass() const;
    void add(std::string name, bool pass, double margin, std::string detail = "",
             double warn_below = kWarnMargin);
    void merge(const VerificationReport& other);
};

std::string render_table(const VerificationReport& report);
std::string render_csv(const VerificationReport& report);

using IdSetPair = std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;

// Counts, for every unordered pair of distinct ids in [0, n), how many input
// pairs separate it; passes only if every count is exactly one.
VerificationReport check_coverage(std::span<const IdSetPair> pairs, std::size_t n);
VerificationReport check_coverage(const BallWspd& wspd);

// Re-derives witness balls from raw coordinates and re-checks the separation
// condition of every pair. Reports the minimum slack.
VerificationReport check_separation(const BallWspd& wspd, double tolerance);
VerificationReport check_separation(const BallWspd& wspd);

// Exact max dilation by full distance-matrix relaxation, cubic time.
// Guarded to n <= 600; +infinity when disconnected. Kept independent of the
// per-source traversal used elsewhere.
double all_pairs_dilation_oracle(std::span<const Point> points, std::span<const Edge> edges);

// For every pair and every instance, rebuilds the proof's witness balls
// (triple-radius co-centered balls for clustered sides, the tangent offset
// ball for singleton sides) and checks point-set separation at s, including
// containment of the instance points.
VerificationReport check_instance_separation(const BallWspd& wspd,
                                             std::span<const PreciseInstance> instances,
                                             double tolerance);
VerificationReport check_instance_separation(const BallWspd& wspd,
                                             std::span<const PreciseInstance> instances);

}  // namespace impspan
