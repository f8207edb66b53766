#include "impspan/wspd_balls.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace impspan {

namespace {

std::string pair_text(std::uint32_t i, std::uint32_t j) {
    return "balls " + std::to_string(i) + " and " + std::to_string(j);
}

// Lexicographic duplicate scan over the raw coordinates.
std::optional<std::pair<std::uint32_t, std::uint32_t>> find_coincident_centers(std::span<const Ball> balls) {
    std::vector<std::uint32_t> order(balls.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t i, std::uint32_t j) {
        return balls[i].center < balls[j].center;
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (balls[order[k - 1]].center == balls[order[k]].center) {
            const auto [i, j] = std::minmax(order[k - 1], order[k]);
            return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

// Overlap query against a prebuilt tree: prune nodes whose box is farther
// from the query center than the query radius plus the largest radius below.
std::optional<std::pair<std::uint32_t, std::uint32_t>> find_overlap_with_tree(
    std::span<const Ball> balls, const SplitTree& t) {
    const std::size_t d = t.dim();
    std::vector<double> max_radius(t.node_count(), 0.0);
    for (std::size_t u = t.node_count(); u-- > 0;) {
        const SplitTree::Node& nd = t.node(static_cast<NodeId>(u));
        if (nd.is_leaf()) {
            max_radius[u] = balls[t.ids(static_cast<NodeId>(u)).front()].radius;
        } else {
            max_radius[u] = std::max(max_radius[nd.left], max_radius[nd.right]);
        }
    }

    std::vector<NodeId> stack;
    for (std::uint32_t i = 0; i < balls.size(); ++i) {
        const double ri = balls[i].radius;
        stack.push_back(SplitTree::kRoot);
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            double box_dist2 = 0.0;
            for (std::size_t c = 0; c < d; ++c) {
                const double x = t.coord(i, c);
                const double lo = t.box_low(u, c), hi = t.box_high(u, c);
                const double gap = x < lo ? lo - x : (x > hi ? x - hi : 0.0);
                box_dist2 += gap * gap;
            }
            const double reach = ri + max_radius[u];
            if (box_dist2 > reach * reach) continue;
            const SplitTree::Node& nd = t.node(u);
            if (nd.is_leaf()) {
                const std::uint32_t j = t.ids(u).front();
                if (j != i && ball_distance(balls[i], balls[j]) <= 0.0) {
                    stack.clear();
                    const auto [lo_id, hi_id] = std::minmax(i, j);
                    return std::make_pair(lo_id, hi_id);
                }
            } else {
                stack.push_back(static_cast<NodeId>(nd.left));
                stack.push_back(static_cast<NodeId>(nd.right));
            }
        }
    }
    return std::nullopt;
}

}  // namespace

BallPair BallWspd::materialize(std::size_t i) const {
    const BallWspdEntry& e = entries_[i];
    return BallPair{sorted_ids(tree_, e.a), sorted_ids(tree_, e.b), e.category};
}

std::vector<BallPair> BallWspd::materialize_all() const {
    std::vector<BallPair> out;
    out.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) out.push_back(materialize(i));
    return out;
}

bool singleton_separation_test(const SplitTree& t, std::span<const Ball> balls,
                               std::uint32_t k, NodeId w, double s) {
    if (w >= t.node_count()) throw std::invalid_argument("singleton_separation_test: bad node");
    if (t.node(w).is_leaf()) return true;
    return singleton_separation_margin(t, k, balls[k].radius, w, s) >= 0.0;
}

std::vector<BallPair> find_pairs(const SplitTree& t, std::span<const Ball> balls,
                                 NodeId v, NodeId w, double s) {
    if (v >= t.node_count() || w >= t.node_count()) throw std::invalid_argument("find_pairs: bad node");
    if (!t.node(v).is_leaf()) throw std::invalid_argument("find_pairs: v must be a leaf");
    const SplitTree::Node& nv = t.node(v);
    const SplitTree::Node& nw = t.node(w);
    if (nv.begin < nw.end && nw.begin < nv.end) {
        throw std::invalid_argument("find_pairs: node point sets overlap");
    }

    const std::uint32_t k = t.ids(v).front();
    std::vector<BallPair> out;
    std::vector<NodeId> stack;
    detail::stream_find_pairs(t, k, balls[k].radius, w, s,
                              [&](NodeId a, NodeId b, PairCategory cat) {
                                  out.push_back(BallPair{sorted_ids(t, a), sorted_ids(t, b), cat});
                              },
                              stack, nullptr);
    return out;
}

SplitTree prepare_wspd_tree(std::span<const Ball> balls, double s) {
    if (balls.empty()) throw std::invalid_argument("compute_ball_wspd: empty input");
    if (s <= 0.0) throw std::invalid_argument("compute_ball_wspd: s must be positive");
    for (const Ball& b : balls) {
        if (b.radius < 0.0) throw std::invalid_argument("compute_ball_wspd: negative radius");
    }

    if (auto dup = find_coincident_centers(balls)) {
        throw std::invalid_argument("compute_ball_wspd: " + pair_text(dup->first, dup->second) +
                                    " overlap (coincident centers)");
    }

    std::vector<Point> centers;
    centers.reserve(balls.size());
    for (const Ball& b : balls) centers.push_back(b.center);
    SplitTree tree = build_split_tree(centers);

    if (auto bad = find_overlap_with_tree(balls, tree)) {
        throw std::invalid_argument("compute_ball_wspd: " + pair_text(bad->first, bad->second) +
                                    " overlap or touch");
    }
    return tree;
}

BallWspd compute_ball_wspd(std::span<const Ball> balls, double s, FindPairsStats* stats) {
    BallWspd w;
    w.s_ = s;
    w.tree_ = prepare_wspd_tree(balls, s);
    w.balls_.assign(balls.begin(), balls.end());

    for_each_ball_pair(w.tree_, balls, s,
                       [&](NodeId a, NodeId b, PairCategory cat) { w.entries_.push_back({a, b, cat}); },
                       stats);
    return w;
}

double packing_bound(double s, int d) {
    if (s <= 0.0) throw std::invalid_argument("packing_bound: s must be positive");
    if (d < 1) throw std::invalid_argument("packing_bound: d must be positive");
    return std::pow(3.0 * s + 9.0, d) / unit_ball_volume_coeff(d);
}

namespace {

// Witness ball of a center set: midpoint of the tight box of the centers,
// radius (sqrt(d)/2) * L_max. Recomputed from scratch on purpose.
Ball center_witness(std::span<const std::uint32_t> ids, std::span<const Ball> balls) {
    std::vector<Point> centers;
    centers.reserve(ids.size());
    for (std::uint32_t id : ids) centers.push_back(balls[id].center);
    return enclosing_ball(bounding_box(centers));
}

}  // namespace

double ball_pair_separation_margin(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                                   std::span<const Ball> balls, double s) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ball_pair_separation_margin: empty side");
    if (a.size() == 1 && b.size() == 1) return std::numeric_limits<double>::infinity();

    const double factor = 3.0 * s + 4.0;
    if (a.size() == 1 || b.size() == 1) {
        const std::uint32_t k = a.size() == 1 ? a.front() : b.front();
        const auto& bulk = a.size() == 1 ? b : a;
        const Ball witness = center_witness(bulk, balls);
        const double gap = distance(balls[k].center, witness.center) - witness.radius - balls[k].radius;
        return gap - factor * witness.radius;
    }

    const Ball wa = center_witness(a, balls);
    const Ball wb = center_witness(b, balls);
    const double rho = std::max(wa.radius, wb.radius);
    const double gap = distance(wa.center, wb.center) - 2.0 * rho;
    return gap - factor * rho;
}

bool ball_pair_well_separated(const BallPair& pair, std::span<const Ball> balls, double s) {
    return ball_pair_separation_margin(pair.a, pair.b, balls, s) >= 0.0;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> find_overlapping_pair(std::span<const Ball> balls) {
    if (balls.size() < 2) return std::nullopt;
    if (auto dup = find_coincident_centers(balls)) return dup;
    std::vector<Point> centers;
    centers.reserve(balls.size());
    for (const Ball& b : balls) centers.push_back(b.center);
    const SplitTree t = build_split_tree(centers);
    return find_overlap_with_tree(balls, t);
}

}  // namespace impspan
