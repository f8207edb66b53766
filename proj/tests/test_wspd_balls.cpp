#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <map>
#include <string>

#include "impspan/generate.hpp"
#include "impspan/verify.hpp"
#include "impspan/wspd_balls.hpp"

using namespace impspan;

namespace {
constexpr double kPi = 3.14159265358979323846;

// Two tiny balls close together plus one large ball to the side: the mixed
// pair of the point stage needs partitioning when the large radius grows.
std::vector<Ball> cluster_and_giant(double giant_radius) {
    return {{{0, 0}, 0.1}, {{1, 0}, 0.1}, {{60, 0}, giant_radius}};
}

}  // namespace

TEST_CASE("packing_bound") {
    CHECK(packing_bound(1.0, 2) == doctest::Approx(144.0 / kPi).epsilon(1e-12));
    CHECK(packing_bound(1.0, 1) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(packing_bound(2.0, 2) == doctest::Approx(225.0 / kPi).epsilon(1e-12));
    CHECK_THROWS_AS(packing_bound(0.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(packing_bound(1.0, 0), std::invalid_argument);
}

TEST_CASE("singleton gap test against a clustered node") {
    const double s = 1.0;
    auto run = [&](double giant_radius) {
        const auto balls = cluster_and_giant(giant_radius);
        const SplitTree t = prepare_wspd_tree(balls, s);
        // The low child of the root holds the two cluster centers.
        const auto& root = t.node(SplitTree::kRoot);
        const auto w = static_cast<NodeId>(root.left);
        REQUIRE(t.node(w).count() == 2);
        return singleton_separation_test(t, balls, 2, w, s);
    };
    // gap 59.5 - rho - r_k versus 7 * rho with rho = sqrt(2)/2.
    CHECK(run(50.0));
    CHECK_FALSE(run(56.0));

    // Leaf targets always pass.
    const auto balls = cluster_and_giant(50.0);
    const SplitTree t = prepare_wspd_tree(balls, s);
    CHECK(singleton_separation_test(t, balls, 2, t.leaf_of(0), 1e12));
}

TEST_CASE("find_pairs splits exactly when the gap test fails") {
    const double s = 1.0;

    SUBCASE("target already separated: one pair covering the whole node") {
        const auto balls = cluster_and_giant(50.0);
        const SplitTree t = prepare_wspd_tree(balls, s);
        const auto w = static_cast<NodeId>(t.node(SplitTree::kRoot).left);
        const auto pairs = find_pairs(t, balls, t.leaf_of(2), w, s);
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0].a == std::vector<std::uint32_t>{2});
        CHECK(pairs[0].b == std::vector<std::uint32_t>{0, 1});
        CHECK(pairs[0].category == PairCategory::direct);
    }

    SUBCASE("failing test recurses to the leaves") {
        const auto balls = cluster_and_giant(56.0);
        const SplitTree t = prepare_wspd_tree(balls, s);
        const auto w = static_cast<NodeId>(t.node(SplitTree::kRoot).left);
        const auto pairs = find_pairs(t, balls, t.leaf_of(2), w, s);
        REQUIRE(pairs.size() == 2);
        for (const BallPair& p : pairs) {
            CHECK(p.a == std::vector<std::uint32_t>{2});
            CHECK(p.b.size() == 1);
            CHECK(p.category == PairCategory::partitioned);
        }
    }

    SUBCASE("leaf target returns one singleton pair") {
        const auto balls = cluster_and_giant(56.0);
        const SplitTree t = prepare_wspd_tree(balls, s);
        const auto pairs = find_pairs(t, balls, t.leaf_of(2), t.leaf_of(0), s);
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0].a == std::vector<std::uint32_t>{2});
        CHECK(pairs[0].b == std::vector<std::uint32_t>{0});
    }

    SUBCASE("preconditions") {
        const auto balls = cluster_and_giant(56.0);
        const SplitTree t = prepare_wspd_tree(balls, s);
        const auto w = static_cast<NodeId>(t.node(SplitTree::kRoot).left);
        CHECK_THROWS_AS(find_pairs(t, balls, w, t.leaf_of(2), s), std::invalid_argument);
        CHECK_THROWS_AS(find_pairs(t, balls, t.leaf_of(0), w, s), std::invalid_argument);
    }
}

TEST_CASE("three-ball decomposition matches the hand trace") {
    FindPairsStats stats;
    const BallWspd w = compute_ball_wspd(cluster_and_giant(56.0), 1.0, &stats);
    REQUIRE(w.size() == 3);

    std::map<std::string, PairCategory> seen;
    for (const BallPair& p : w.materialize_all()) {
        std::string key;
        for (auto id : p.a) key += std::to_string(id);
        key += "|";
        for (auto id : p.b) key += std::to_string(id);
        seen[key] = p.category;
    }
    REQUIRE(seen.count("0|1"));
    CHECK(seen["0|1"] == PairCategory::direct);
    REQUIRE(seen.count("2|0"));
    CHECK(seen["2|0"] == PairCategory::partitioned);
    REQUIRE(seen.count("2|1"));
    CHECK(seen["2|1"] == PairCategory::partitioned);

    CHECK(stats.recursion_steps == 1);
    CHECK(stats.radius_rule_violations == 0);
    // r_k = 56 against sqrt(2) * 1.
    CHECK(stats.min_radius_margin == doctest::Approx(56.0 - std::sqrt(2.0)).epsilon(1e-12));

    CHECK(check_coverage(w).all_pass());
    CHECK(check_separation(w).all_pass());
}

TEST_CASE("two disjoint balls give one singleton pair") {
    const std::vector<Ball> balls{{{0, 0, 0}, 1}, {{10, 0, 0}, 2}};
    for (double s : {0.5, 8.0}) {
        const BallWspd w = compute_ball_wspd(balls, s);
        REQUIRE(w.size() == 1);
        const BallPair p = w.materialize(0);
        CHECK(p.a.size() == 1);
        CHECK(p.b.size() == 1);
    }
}

TEST_CASE("random inputs satisfy coverage and separation") {
    for (const auto& [n, d, seed] : {std::tuple<std::size_t, std::size_t, std::uint64_t>{100, 2, 10},
                                     {60, 1, 11},
                                     {80, 3, 12}}) {
        const auto balls = generate_disjoint_balls(n, d, 0.0, 1.0, seed);
        const BallWspd w = compute_ball_wspd(balls, 2.0);

        std::size_t cross = 0;
        for (const BallPair& p : w.materialize_all()) {
            cross += p.a.size() * p.b.size();
            CHECK(ball_pair_well_separated(p, w.balls(), w.separation()));
        }
        CHECK(cross == n * (n - 1) / 2);
        CHECK(check_coverage(w).all_pass());
    }
}

TEST_CASE("clustered inputs exercise the partition recursion") {
    const auto balls = generate_clustered_balls(120, 2, 5);
    REQUIRE_FALSE(find_overlapping_pair(balls).has_value());

    for (double s : {0.5, 2.0, 12.0}) {
        FindPairsStats stats;
        const BallWspd w = compute_ball_wspd(balls, s, &stats);
        CHECK(stats.recursion_steps > 0);
        CHECK(stats.radius_rule_violations == 0);
        CHECK(stats.min_radius_margin > 0.0);
        CHECK(check_coverage(w).all_pass());
        CHECK(check_separation(w).all_pass());

        // Partition multiplicity of each surviving set stays under the
        // packing bound.
        std::map<NodeId, std::size_t> multiplicity;
        std::size_t partitioned = 0;
        for (const BallWspdEntry& e : w.entries()) {
            if (e.category == PairCategory::partitioned) {
                ++multiplicity[e.b];
                ++partitioned;
            }
        }
        CHECK(partitioned > 0);
        const double bound = packing_bound(s, 2);
        for (const auto& [node, count] : multiplicity) {
            CHECK(static_cast<double>(count) <= bound);
        }
    }
}

TEST_CASE("separation margins recomputed from raw coordinates") {
    const auto balls = cluster_and_giant(56.0);

    // Singleton-singleton is unconditional.
    const BallPair trivial{{0}, {1}, PairCategory::direct};
    CHECK(ball_pair_well_separated(trivial, balls, 1e9));

    // The unpartitioned mixed pair is exactly the one that fails.
    const BallPair merged{{2}, {0, 1}, PairCategory::direct};
    CHECK_FALSE(ball_pair_well_separated(merged, balls, 1.0));

    // Far-apart plural sides pass.
    const std::vector<Ball> quad{{{0, 0}, 0.1}, {{1, 0}, 0.1}, {{500, 0}, 0.1}, {{501, 0}, 0.1}};
    const BallPair plural{{0, 1}, {2, 3}, PairCategory::direct};
    CHECK(ball_pair_well_separated(plural, quad, 2.0));
    // Same sides, preposterous separation demand: fails.
    CHECK_FALSE(ball_pair_well_separated(plural, quad, 1e6));
}

TEST_CASE("overlap and degenerate input handling") {
    const std::vector<Ball> tangent{{{0, 0}, 1}, {{2, 0}, 1}};
    CHECK_THROWS_WITH_AS(compute_ball_wspd(tangent, 1.0),
                         doctest::Contains("balls 0 and 1"), std::invalid_argument);

    const std::vector<Ball> coincident{{{1, 1}, 0.0}, {{1, 1}, 0.0}};
    CHECK_THROWS_AS(compute_ball_wspd(coincident, 1.0), std::invalid_argument);

    const std::vector<Ball> negative{{{0, 0}, -1.0}};
    CHECK_THROWS_AS(compute_ball_wspd(negative, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(compute_ball_wspd(std::span<const Ball>{}, 1.0), std::invalid_argument);

    const std::vector<Ball> one{{{5, 5}, 2.0}};
    const BallWspd w = compute_ball_wspd(one, 3.0);
    CHECK(w.size() == 0);

    // find_overlapping_pair pinpoints the offending ids.
    std::vector<Ball> many = generate_disjoint_balls(50, 2, 0.2, 0.5, 77);
    CHECK_FALSE(find_overlapping_pair(many).has_value());
    many.push_back(many[17]);
    const auto bad = find_overlapping_pair(many);
    REQUIRE(bad.has_value());
    CHECK(bad->first == 17);
    CHECK(bad->second == 50);
}
