#include "impspan/split_tree.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace impspan {

AxisBox SplitTree::box(NodeId u) const {
    AxisBox b;
    b.low.assign(box_low_.begin() + u * dim_, box_low_.begin() + (u + 1) * dim_);
    b.high.assign(box_high_.begin() + u * dim_, box_high_.begin() + (u + 1) * dim_);
    return b;
}

double SplitTree::box_max_length(NodeId u) const {
    double m = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) m = std::max(m, box_high(u, i) - box_low(u, i));
    return m;
}

Point SplitTree::point(std::uint32_t point_id) const {
    return Point(coords_.begin() + point_id * dim_, coords_.begin() + (point_id + 1) * dim_);
}

namespace {

// Tight box of perm[begin, end), written into low/high at node slot `u`.
void compute_box(const std::vector<double>& coords, std::size_t dim,
                 const std::uint32_t* perm, std::uint32_t begin, std::uint32_t end,
                 std::vector<double>& low, std::vector<double>& high, std::size_t u) {
    const double* first = &coords[perm[begin] * dim];
    for (std::size_t i = 0; i < dim; ++i) {
        low[u * dim + i] = first[i];
        high[u * dim + i] = first[i];
    }
    for (std::uint32_t k = begin + 1; k < end; ++k) {
        const double* p = &coords[perm[k] * dim];
        for (std::size_t i = 0; i < dim; ++i) {
            low[u * dim + i] = std::min(low[u * dim + i], p[i]);
            high[u * dim + i] = std::max(high[u * dim + i], p[i]);
        }
    }
}

}  // namespace

SplitTree build_split_tree(std::span<const Point> centers) {
    if (centers.empty()) throw std::invalid_argument("build_split_tree: empty input");

    SplitTree t;
    t.n_ = centers.size();
    t.dim_ = centers.front().size();
    if (t.dim_ == 0) throw std::invalid_argument("build_split_tree: zero-dimensional points");

    t.coords_.resize(t.n_ * t.dim_);
    for (std::size_t p = 0; p < t.n_; ++p) {
        if (centers[p].size() != t.dim_) throw std::invalid_argument("build_split_tree: dimension mismatch");
        for (std::size_t i = 0; i < t.dim_; ++i) t.coords_[p * t.dim_ + i] = centers[p][i];
    }

    t.perm_.resize(t.n_);
    for (std::uint32_t p = 0; p < t.n_; ++p) t.perm_[p] = p;
    t.leaf_of_.resize(t.n_);

    t.nodes_.reserve(2 * t.n_ - 1);
    t.box_low_.reserve((2 * t.n_ - 1) * t.dim_);
    t.box_high_.reserve((2 * t.n_ - 1) * t.dim_);

    auto add_node = [&](std::uint32_t begin, std::uint32_t end, std::int32_t parent) -> NodeId {
        const NodeId u = static_cast<NodeId>(t.nodes_.size());
        SplitTree::Node nd;
        nd.begin = begin;
        nd.end = end;
        nd.parent = parent;
        t.nodes_.push_back(nd);
        t.box_low_.resize(t.box_low_.size() + t.dim_);
        t.box_high_.resize(t.box_high_.size() + t.dim_);
        compute_box(t.coords_, t.dim_, t.perm_.data(), begin, end, t.box_low_, t.box_high_, u);
        return u;
    };

    std::vector<NodeId> stack;
    add_node(0, static_cast<std::uint32_t>(t.n_), -1);
    stack.push_back(SplitTree::kRoot);

    while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        const std::uint32_t begin = t.nodes_[u].begin;
        const std::uint32_t end = t.nodes_[u].end;

        if (end - begin == 1) {
            t.leaf_of_[t.perm_[begin]] = u;
            continue;
        }

        // Longest side, ties to the lowest dimension index.
        std::size_t split_dim = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < t.dim_; ++i) {
            const double len = t.box_high(u, i) - t.box_low(u, i);
            if (len > best) {
                best = len;
                split_dim = i;
            }
        }
        if (best <= 0.0) throw std::invalid_argument("build_split_tree: coincident centers");

        const double lo = t.box_low(u, split_dim);
        const double hi = t.box_high(u, split_dim);
        const double mid = 0.5 * (lo + hi);

        std::uint32_t* pb = t.perm_.data() + begin;
        std::uint32_t* pe = t.perm_.data() + end;
        std::uint32_t* split;
        if (mid < hi) {
            // Points exactly on the splitting plane go to the low side.
            split = std::partition(pb, pe, [&](std::uint32_t id) { return t.coord(id, split_dim) <= mid; });
        } else {
            // Degenerate rounding: the midpoint landed on the upper face.
            split = std::partition(pb, pe, [&](std::uint32_t id) { return t.coord(id, split_dim) < hi; });
        }
        const std::uint32_t cut = static_cast<std::uint32_t>(split - t.perm_.data());

        const NodeId l = add_node(begin, cut, static_cast<std::int32_t>(u));
        const NodeId r = add_node(cut, end, static_cast<std::int32_t>(u));
        t.nodes_[u].left = static_cast<std::int32_t>(l);
        t.nodes_[u].right = static_cast<std::int32_t>(r);
        stack.push_back(l);
        stack.push_back(r);
    }

    return t;
}

std::optional<NodeId> node_parent(const SplitTree& t, NodeId u) {
    if (u >= t.node_count()) throw std::invalid_argument("node_parent: node is not part of this tree");
    const std::int32_t p = t.node(u).parent;
    if (p < 0) return std::nullopt;
    return static_cast<NodeId>(p);
}

std::vector<std::uint32_t> min_id_per_node(const SplitTree& t) {
    std::vector<std::uint32_t> mins(t.node_count());
    // Children are created after their parent, so a reverse sweep sees both
    // children before the parent.
    for (std::size_t u = t.node_count(); u-- > 0;) {
        const SplitTree::Node& nd = t.node(static_cast<NodeId>(u));
        if (nd.is_leaf()) {
            mins[u] = t.ids(static_cast<NodeId>(u)).front();
        } else {
            mins[u] = std::min(mins[nd.left], mins[nd.right]);
        }
    }
    return mins;
}

std::string dump_tree(const SplitTree& t) {
    std::string out;
    char buf[64];
    // Depth-first, left before right, depth tracked explicitly.
    std::vector<std::pair<NodeId, int>> stack{{SplitTree::kRoot, 0}};
    while (!stack.empty()) {
        auto [u, depth] = stack.back();
        stack.pop_back();
        out.append(2 * static_cast<std::size_t>(depth), ' ');
        std::snprintf(buf, sizeof buf, "depth=%d box=", depth);
        out += buf;
        for (std::size_t i = 0; i < t.dim(); ++i) {
            std::snprintf(buf, sizeof buf, "%s[%.17g,%.17g]", i ? "x" : "", t.box_low(u, i), t.box_high(u, i));
            out += buf;
        }
        std::snprintf(buf, sizeof buf, " count=%u\n", t.node(u).count());
        out += buf;
        const SplitTree::Node& nd = t.node(u);
        if (!nd.is_leaf()) {
            stack.emplace_back(static_cast<NodeId>(nd.right), depth + 1);
            stack.emplace_back(static_cast<NodeId>(nd.left), depth + 1);
        }
    }
    return out;
}

}  // namespace impspan
