#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "impspan/split_tree.hpp"

namespace impspan {

// Pair of split-tree nodes with disjoint point sets.
struct NodePair {
    NodeId a;
    NodeId b;
};

// Slack of the separation test for two nodes. Both witness balls take the
// larger of the two half-diagonal radii, so they have the same radius and
// each still contains its own box. The test is
//   dist(box centers) - 2*rho >= s*rho.
inline double node_pair_separation_margin(const SplitTree& t, NodeId a, NodeId b, double s) {
    const std::size_t d = t.dim();
    double dist2 = 0.0, la = 0.0, lb = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        const double ca = 0.5 * (t.box_low(a, i) + t.box_high(a, i));
        const double cb = 0.5 * (t.box_low(b, i) + t.box_high(b, i));
        dist2 += (ca - cb) * (ca - cb);
        la = std::max(la, t.box_high(a, i) - t.box_low(a, i));
        lb = std::max(lb, t.box_high(b, i) - t.box_low(b, i));
    }
    const double rho = 0.5 * std::sqrt(static_cast<double>(d)) * std::max(la, lb);
    return std::sqrt(dist2) - (2.0 + s) * rho;
}

inline bool nodes_well_separated(const SplitTree& t, NodeId a, NodeId b, double s) {
    return node_pair_separation_margin(t, a, b, s) >= 0.0;
}

namespace detail {

// Recursion kernel, dimension-templated so the coordinate loop unrolls.
// D == 0 falls back to the runtime dimension.
template <std::size_t D, typename Emit>
void point_pair_kernel(const SplitTree& t, double s, Emit&& emit) {
    const std::size_t d = D == 0 ? t.dim() : D;
    const double half_sqrt_d = 0.5 * std::sqrt(static_cast<double>(d));
    const double sep = 2.0 + s;
    const SplitTree::Node* nodes = t.nodes_data();
    const double* lo = t.box_low_data();
    const double* hi = t.box_high_data();
    const NodeId node_count = static_cast<NodeId>(t.node_count());

    std::vector<NodePair> stack;
    stack.reserve(128);
    for (NodeId u = 0; u < node_count; ++u) {
        if (nodes[u].left < 0) continue;
        stack.push_back({static_cast<NodeId>(nodes[u].left), static_cast<NodeId>(nodes[u].right)});
        while (!stack.empty()) {
            const auto [a, b] = stack.back();
            stack.pop_back();
            const double* alo = lo + a * d;
            const double* ahi = hi + a * d;
            const double* blo = lo + b * d;
            const double* bhi = hi + b * d;
            double dist2 = 0.0, la = 0.0, lb = 0.0;
            for (std::size_t i = 0; i < (D == 0 ? d : D); ++i) {
                const double diff = 0.5 * ((alo[i] + ahi[i]) - (blo[i] + bhi[i]));
                dist2 += diff * diff;
                la = std::max(la, ahi[i] - alo[i]);
                lb = std::max(lb, bhi[i] - blo[i]);
            }
            const double rho = half_sqrt_d * std::max(la, lb);
            if (std::sqrt(dist2) - sep * rho >= 0.0) {
                emit(a, b);
                continue;
            }
            // Split the node with the longer box, ties to the first argument.
            if (la >= lb) {
                stack.push_back({static_cast<NodeId>(nodes[a].left), b});
                stack.push_back({static_cast<NodeId>(nodes[a].right), b});
            } else {
                stack.push_back({a, static_cast<NodeId>(nodes[b].left)});
                stack.push_back({a, static_cast<NodeId>(nodes[b].right)});
            }
        }
    }
}

}  // namespace detail

// Streams every pair of the point decomposition at separation s. Starting
// from the two children of each internal node, a pair is emitted when
// separated; otherwise the node with the longer box is split, ties splitting
// the first argument. Every emitted pair satisfies nodes_well_separated, and
// emission order is deterministic.
template <typename Emit>
void for_each_point_pair(const SplitTree& t, double s, Emit&& emit) {
    switch (t.dim()) {
        case 1: detail::point_pair_kernel<1>(t, s, emit); break;
        case 2: detail::point_pair_kernel<2>(t, s, emit); break;
        case 3: detail::point_pair_kernel<3>(t, s, emit); break;
        default: detail::point_pair_kernel<0>(t, s, emit); break;
    }
}

// Materialized pair list; consumers that only need to visit pairs should
// prefer for_each_point_pair.
std::vector<NodePair> compute_point_wspd(const SplitTree& t, double s);

// Ascending point ids under a node.
std::vector<std::uint32_t> sorted_ids(const SplitTree& t, NodeId u);

}  // namespace impspan
