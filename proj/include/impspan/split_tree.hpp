#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "impspan/geometry.hpp"

namespace impspan {

using NodeId = std::uint32_t;

// Binary tree over a point set, built by cutting each tight bounding box at
// the midpoint of its longest side. Leaves hold exactly one point and every
// node stores the tight box of its subtree. Point ids are indices into the
// input order; each node owns a contiguous slice of one shared permutation.
class SplitTree {
public:
    struct Node {
        std::uint32_t begin = 0;  // slice [begin, end) of the permutation
        std::uint32_t end = 0;
        std::int32_t left = -1;
        std::int32_t right = -1;
        std::int32_t parent = -1;

        bool is_leaf() const { return left < 0; }
        std::uint32_t count() const { return end - begin; }
    };

    static constexpr NodeId kRoot = 0;

    std::size_t dim() const { return dim_; }
    std::size_t point_count() const { return n_; }
    std::size_t node_count() const { return nodes_.size(); }

    const Node& node(NodeId u) const { return nodes_[u]; }
    NodeId leaf_of(std::uint32_t point_id) const { return leaf_of_[point_id]; }

    // Point ids stored under u, in permutation order.
    std::span<const std::uint32_t> ids(NodeId u) const {
        const Node& nd = nodes_[u];
        return {perm_.data() + nd.begin, nd.end - nd.begin};
    }

    double box_low(NodeId u, std::size_t i) const { return box_low_[u * dim_ + i]; }
    double box_high(NodeId u, std::size_t i) const { return box_high_[u * dim_ + i]; }
    AxisBox box(NodeId u) const;
    double box_max_length(NodeId u) const;

    // Raw views for traversal-heavy code.
    const Node* nodes_data() const { return nodes_.data(); }
    const double* box_low_data() const { return box_low_.data(); }
    const double* box_high_data() const { return box_high_.data(); }

    double coord(std::uint32_t point_id, std::size_t i) const { return coords_[point_id * dim_ + i]; }
    Point point(std::uint32_t point_id) const;

    friend SplitTree build_split_tree(std::span<const Point> centers);

private:
    std::size_t dim_ = 0;
    std::size_t n_ = 0;
    std::vector<double> coords_;  // n * dim, input order
    std::vector<std::uint32_t> perm_;
    std::vector<Node> nodes_;
    std::vector<double> box_low_, box_high_;  // node_count * dim
    std::vector<NodeId> leaf_of_;
};

// Builds the tree. Centers must be nonempty, of uniform dimension, and
// pairwise distinct; coincident centers are rejected.
SplitTree build_split_tree(std::span<const Point> centers);

// Parent of u, empty for the root. Throws if u is not a node of t.
std::optional<NodeId> node_parent(const SplitTree& t, NodeId u);

// Minimum point id per node, indexed by node id. Used to pick deterministic
// representatives.
std::vector<std::uint32_t> min_id_per_node(const SplitTree& t);

// Debug dump, one node per line: depth, box, point count.
std::string dump_tree(const SplitTree& t);

}  // namespace impspan
