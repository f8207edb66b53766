#pragma once

#include <span>
#include <vector>

#include "impspan/spanner.hpp"

namespace impspan {

// Planar segment between an inner endpoint p and an outer endpoint q.
struct Segment {
    Point p;
    Point q;
};

// n segments on rays at angles 2*pi*i/n, running from the circle of radius
// 0.4 to the circle of radius (t+1)/2 around the origin. Every precise
// instance of these forces a complete t-spanner.
std::vector<Segment> generate_radial_segments(int n, double t);

// Instance picking the inner endpoints of segments i and j and the outer
// endpoint everywhere else. Requires 0 <= i < j < n.
PreciseInstance adversarial_instance(std::span<const Segment> segments, int i, int j);

struct RemovedEdgeCase {
    int i = 0;
    int j = 0;
    // Best two-hop detour dilation minus t: min over k != i,j of
    // (|p_i q_k| + |q_k p_j|) / |p_i p_j| - t.
    double detour_margin = 0.0;
    // True shortest-path dilation minus t in the instance graph missing
    // edge (i, j); the pass condition.
    double shortest_margin = 0.0;
    bool pass = false;
};

struct LowerBoundReport {
    int n = 0;
    double t = 0.0;
    std::vector<RemovedEdgeCase> cases;

    bool all_pass() const;
    std::size_t failures() const;
};

// For every pair (i, j), removes that edge from the complete graph, builds
// the adversarial instance, and requires the true shortest-path dilation
// between the two inner endpoints to exceed t. Requires n >= 3.
LowerBoundReport verify_completeness_required(int n, double t, int threads = 1);

}  // namespace impspan
