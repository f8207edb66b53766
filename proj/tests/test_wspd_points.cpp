#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>
#include <set>

#include "impspan/verify.hpp"
#include "impspan/wspd_points.hpp"

using namespace impspan;

namespace {

std::vector<Point> random_points(std::size_t n, std::size_t d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    std::vector<Point> pts(n, Point(d));
    for (Point& p : pts) {
        for (double& x : p) x = coord(rng);
    }
    return pts;
}

std::vector<IdSetPair> materialize(const SplitTree& t, const std::vector<NodePair>& pairs) {
    std::vector<IdSetPair> out;
    out.reserve(pairs.size());
    for (const NodePair& p : pairs) out.emplace_back(sorted_ids(t, p.a), sorted_ids(t, p.b));
    return out;
}

}  // namespace

TEST_CASE("separation test on hand-built nodes") {
    // Root children of this tree are exactly {0,1} and {8,9}.
    const std::vector<Point> pts{{0}, {1}, {8}, {9}};
    const SplitTree t = build_split_tree(pts);
    const auto& root = t.node(SplitTree::kRoot);
    const auto a = static_cast<NodeId>(root.left);
    const auto b = static_cast<NodeId>(root.right);
    // rho = 0.5, center distance 8: gap 7 against s * 0.5.
    CHECK(nodes_well_separated(t, a, b, 12.0));
    CHECK(node_pair_separation_margin(t, a, b, 12.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_FALSE(nodes_well_separated(t, a, b, 15.0));

    // Two leaves have zero witness radius, so any s passes.
    CHECK(nodes_well_separated(t, t.leaf_of(0), t.leaf_of(3), 1e9));
}

TEST_CASE("two points give one pair") {
    const std::vector<Point> pts{{3, 1}, {-2, 4}};
    const SplitTree t = build_split_tree(pts);
    for (double s : {0.5, 2.0, 100.0}) {
        const auto pairs = compute_point_wspd(t, s);
        REQUIRE(pairs.size() == 1);
        CHECK(t.node(pairs[0].a).count() == 1);
        CHECK(t.node(pairs[0].b).count() == 1);
    }
}

TEST_CASE("hand-traced decomposition of four collinear points") {
    const std::vector<Point> pts{{0}, {1}, {8}, {9}};
    const SplitTree t = build_split_tree(pts);
    const auto pairs = compute_point_wspd(t, 12.0);
    auto sets = materialize(t, pairs);
    // Normalize for comparison.
    for (auto& p : sets) {
        if (p.second < p.first) std::swap(p.first, p.second);
    }
    std::sort(sets.begin(), sets.end());
    const std::vector<IdSetPair> expected{
        {{0}, {1}}, {{0, 1}, {2, 3}}, {{2}, {3}}};
    CHECK(sets == expected);
}

TEST_CASE("coverage and separation on random points") {
    for (const auto& [n, d, seed] : {std::tuple<std::size_t, std::size_t, std::uint64_t>{10, 2, 1},
                                     {40, 1, 2},
                                     {64, 3, 3},
                                     {150, 2, 4}}) {
        const auto pts = random_points(n, d, seed);
        const SplitTree t = build_split_tree(pts);
        for (double s : {0.7, 2.0, 9.0}) {
            const auto pairs = compute_point_wspd(t, s);
            const auto sets = materialize(t, pairs);

            std::size_t cross = 0;
            for (const auto& p : sets) {
                cross += p.first.size() * p.second.size();
                // Both sides from one permutation slice never intersect.
                std::set<std::uint32_t> inter;
                std::set_intersection(p.first.begin(), p.first.end(), p.second.begin(),
                                      p.second.end(), std::inserter(inter, inter.begin()));
                CHECK(inter.empty());
            }
            CHECK(cross == n * (n - 1) / 2);
            CHECK(check_coverage(sets, n).all_pass());

            for (const NodePair& p : pairs) CHECK(nodes_well_separated(t, p.a, p.b, s));
        }
    }
}

TEST_CASE("ten random points cover exactly forty-five id pairs") {
    const auto pts = random_points(10, 2, 99);
    const SplitTree t = build_split_tree(pts);
    const auto pairs = compute_point_wspd(t, 2.0);
    std::size_t cross = 0;
    for (const auto& p : materialize(t, pairs)) cross += p.first.size() * p.second.size();
    CHECK(cross == 45);
}

TEST_CASE("pair growth approaches linear on uniform inputs") {
    // Small inputs sit in the near-complete regime where doubling n almost
    // quadruples the pair count; the ratio has to fall toward 2 once the
    // neighborhoods saturate.
    const double s = 2.0;
    double prev = 0.0;
    for (std::size_t n : {256, 512, 1024}) {
        double total = 0.0;
        for (std::uint64_t k = 0; k < 3; ++k) {
            const auto pts = random_points(n, 2, 1000 + n + k);
            const SplitTree t = build_split_tree(pts);
            total += static_cast<double>(compute_point_wspd(t, s).size());
        }
        const double m = total / 3.0;
        if (prev != 0.0) CHECK(m / prev <= 2.5);
        prev = m;
    }
}

TEST_CASE("invalid separation is rejected") {
    const std::vector<Point> pts{{0, 0}, {1, 1}};
    const SplitTree t = build_split_tree(pts);
    CHECK_THROWS_AS(compute_point_wspd(t, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(compute_point_wspd(t, -1.0), std::invalid_argument);
}
