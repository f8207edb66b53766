#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "impspan/split_tree.hpp"
#include "impspan/wspd_points.hpp"

namespace impspan {

enum class PairCategory : std::uint8_t {
    direct,       // the pair also appears in the point decomposition
    partitioned,  // produced by splitting the clustered side of a mixed pair
};

// Materialized pair of ball id sets.
struct BallPair {
    std::vector<std::uint32_t> a;
    std::vector<std::uint32_t> b;
    PairCategory category = PairCategory::direct;
};

// Compact pair: both sides are tree nodes. For partitioned pairs, side a is
// the query leaf and side b the surviving piece of the clustered side.
struct BallWspdEntry {
    NodeId a;
    NodeId b;
    PairCategory category;
};

// Counters for the partition recursion. Whenever the test fails at a node
// with more than one point, the query ball's radius must exceed
// sqrt(d) * L_max of that node's box; the margin of that rule is tracked.
struct FindPairsStats {
    std::uint64_t recursion_steps = 0;
    std::uint64_t radius_rule_violations = 0;
    double min_radius_margin = std::numeric_limits<double>::infinity();
};

class BallWspd {
public:
    BallWspd() = default;

    double separation() const { return s_; }
    const SplitTree& tree() const { return tree_; }
    std::span<const Ball> balls() const { return balls_; }
    std::span<const BallWspdEntry> entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    BallPair materialize(std::size_t i) const;
    std::vector<BallPair> materialize_all() const;

private:
    friend BallWspd compute_ball_wspd(std::span<const Ball> balls, double s, FindPairsStats* stats);

    double s_ = 0.0;
    SplitTree tree_;
    std::vector<Ball> balls_;
    std::vector<BallWspdEntry> entries_;
};

// Slack of the gap test for ball k against the witness ball of node w:
//   dist(c_k, box center) - rho - r_k - (3s+4) * rho,
// where rho is the witness radius (sqrt(d)/2) * L_max(box(w)).
inline double singleton_separation_margin(const SplitTree& t, std::uint32_t k, double r_k,
                                          NodeId w, double s) {
    const std::size_t d = t.dim();
    double dist2 = 0.0, lw = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        const double cw = 0.5 * (t.box_low(w, i) + t.box_high(w, i));
        const double diff = t.coord(k, i) - cw;
        dist2 += diff * diff;
        lw = std::max(lw, t.box_high(w, i) - t.box_low(w, i));
    }
    const double rho = 0.5 * std::sqrt(static_cast<double>(d)) * lw;
    return std::sqrt(dist2) - rho - r_k - (3.0 * s + 4.0) * rho;
}

// True when ball k (not stored under w) is separated from the whole of w.
// A leaf w passes unconditionally: two singletons need no gap test.
bool singleton_separation_test(const SplitTree& t, std::span<const Ball> balls,
                               std::uint32_t k, NodeId w, double s);

namespace detail {

template <typename Emit>
void stream_find_pairs(const SplitTree& t, std::uint32_t k, double r_k, NodeId w0, double s,
                       Emit&& emit, std::vector<NodeId>& stack, FindPairsStats* stats) {
    const NodeId v = t.leaf_of(k);
    const double sqrt_d = std::sqrt(static_cast<double>(t.dim()));
    auto note_recursion = [&](NodeId w) {
        if (!stats) return;
        ++stats->recursion_steps;
        const double margin = r_k - sqrt_d * t.box_max_length(w);
        if (margin <= 0.0) ++stats->radius_rule_violations;
        if (margin < stats->min_radius_margin) stats->min_radius_margin = margin;
    };

    if (t.node(w0).is_leaf() || singleton_separation_margin(t, k, r_k, w0, s) >= 0.0) {
        emit(v, w0, PairCategory::direct);
        return;
    }
    note_recursion(w0);
    stack.push_back(static_cast<NodeId>(t.node(w0).right));
    stack.push_back(static_cast<NodeId>(t.node(w0).left));
    while (!stack.empty()) {
        const NodeId w = stack.back();
        stack.pop_back();
        if (t.node(w).is_leaf() || singleton_separation_margin(t, k, r_k, w, s) >= 0.0) {
            emit(v, w, PairCategory::partitioned);
            continue;
        }
        note_recursion(w);
        stack.push_back(static_cast<NodeId>(t.node(w).right));
        stack.push_back(static_cast<NodeId>(t.node(w).left));
    }
}

}  // namespace detail

// Streams the ball decomposition at separation s over a prebuilt tree.
// The caller is responsible for the disjointness of the balls. emit receives
// (node a, node b, category); for partitioned pairs node a is the query leaf.
template <typename Emit>
void for_each_ball_pair(const SplitTree& t, std::span<const Ball> balls, double s,
                        Emit&& emit, FindPairsStats* stats = nullptr) {
    std::vector<NodeId> stack;
    stack.reserve(64);
    for_each_point_pair(t, 3.0 * s + 6.0, [&](NodeId a, NodeId b) {
        const bool a_single = t.node(a).count() == 1;
        const bool b_single = t.node(b).count() == 1;
        if (a_single == b_single) {
            emit(a, b, PairCategory::direct);
            return;
        }
        // One side is a singleton and the other is a cluster; the cluster may
        // have to be partitioned before the ball-level test holds.
        const NodeId leaf = a_single ? a : b;
        const NodeId bulk = a_single ? b : a;
        const std::uint32_t k = t.ids(leaf).front();
        detail::stream_find_pairs(t, k, balls[k].radius, bulk, s, emit, stack, stats);
    });
}

// Materialized partition of one mixed pair. v must be a leaf whose point set
// is disjoint from that of w.
std::vector<BallPair> find_pairs(const SplitTree& t, std::span<const Ball> balls,
                                 NodeId v, NodeId w, double s);

// Validates the input (radii, coincident centers, overlaps) and builds the
// split tree over the centers: the shared front half of compute_ball_wspd,
// for callers that stream pairs instead of materializing them.
SplitTree prepare_wspd_tree(std::span<const Ball> balls, double s);

// Full decomposition for pairwise disjoint balls. Throws when two balls
// overlap or touch, naming the offending pair.
BallWspd compute_ball_wspd(std::span<const Ball> balls, double s, FindPairsStats* stats = nullptr);

// (3s+9)^d * Gamma(d/2+1) / pi^(d/2): bound on how many partitioned pairs a
// single set can appear in.
double packing_bound(double s, int d);

// Separation slack of a materialized pair, recomputed from raw coordinates:
// witness balls are the enclosing balls of the bounding boxes of each side's
// centers, inflated to the larger of the two radii. Singleton-singleton
// pairs have infinite slack. Used by verification, never by construction.
double ball_pair_separation_margin(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                                   std::span<const Ball> balls, double s);
bool ball_pair_well_separated(const BallPair& pair, std::span<const Ball> balls, double s);

// First pair of balls with non-positive gap (ids ascending), if any.
// Coincident centers count as overlap. Scales as n log n for valid inputs.
std::optional<std::pair<std::uint32_t, std::uint32_t>> find_overlapping_pair(std::span<const Ball> balls);

}  // namespace impspan
