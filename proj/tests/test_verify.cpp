#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <cstdlib>
#include <random>

#include "impspan/generate.hpp"
#include "impspan/verify.hpp"

using namespace impspan;

TEST_CASE("coverage counting on tiny pair lists") {
    const std::vector<IdSetPair> ok2{{{0}, {1}}};
    CHECK(check_coverage(ok2, 2).all_pass());

    const std::vector<IdSetPair> ok3{{{0}, {1}}, {{0, 1}, {2}}};
    CHECK(check_coverage(ok3, 3).all_pass());

    const std::vector<IdSetPair> dup{{{0}, {1}}, {{1}, {0}}};
    const VerificationReport r = check_coverage(dup, 2);
    CHECK_FALSE(r.all_pass());
    CHECK(r.checks.front().detail.find("covered 2 times") != std::string::npos);

    const std::vector<IdSetPair> missing{{{0}, {1}}};
    CHECK_FALSE(check_coverage(missing, 3).all_pass());

    const std::vector<IdSetPair> shared{{{0, 1}, {1}}};
    CHECK_FALSE(check_coverage(shared, 2).all_pass());

    const std::vector<IdSetPair> oob{{{0}, {7}}};
    CHECK_THROWS_AS(check_coverage(oob, 2), std::invalid_argument);
}

TEST_CASE("separation check accepts construction output and flags merged sets") {
    const std::vector<Ball> balls{{{0, 0}, 0.1}, {{1, 0}, 0.1}, {{60, 0}, 56}};
    const BallWspd w = compute_ball_wspd(balls, 1.0);
    const VerificationReport r = check_separation(w);
    CHECK(r.all_pass());
    CHECK(r.checks.front().margin > 0.0);

    // Re-merging the partitioned cluster produces the very pair the
    // construction had to split.
    CHECK(ball_pair_separation_margin(std::vector<std::uint32_t>{2},
                                      std::vector<std::uint32_t>{0, 1}, balls, 1.0) < 0.0);
}

TEST_CASE("matrix oracle on hand-checked graphs") {
    const std::vector<Point> triangle{{0, 0}, {1, 0}, {0, 1}};
    std::vector<Edge> complete{{0, 1}, {0, 2}, {1, 2}};
    CHECK(all_pairs_dilation_oracle(triangle, complete) == doctest::Approx(1.0).epsilon(1e-15));

    const std::vector<Edge> path{{0, 1}, {1, 2}};
    CHECK(all_pairs_dilation_oracle(triangle, path) ==
          doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-14));

    const std::vector<Point> big(601, Point{0, 0});
    CHECK_THROWS_AS(all_pairs_dilation_oracle(big, {}), std::invalid_argument);
}

TEST_CASE("per-source and matrix dilation agree on random graphs") {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> coord(0.0, 10.0);
    for (int it = 0; it < 25; ++it) {
        const std::size_t n = 3 + rng() % 40;
        std::vector<Point> pts(n, Point(2));
        for (Point& p : pts) {
            p[0] = coord(rng);
            p[1] = coord(rng);
        }
        // Random spanning tree plus extra chords keeps the graph connected.
        std::vector<Edge> edges;
        for (std::uint32_t v = 1; v < n; ++v) {
            edges.emplace_back(static_cast<std::uint32_t>(rng() % v), v);
        }
        for (std::size_t extra = 0; extra < n; ++extra) {
            const auto a = static_cast<std::uint32_t>(rng() % n);
            const auto b = static_cast<std::uint32_t>(rng() % n);
            if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        const DilationResult fast = dilation(InstanceGraph(pts, edges));
        const double slow = all_pairs_dilation_oracle(pts, edges);
        CHECK(std::abs(fast.value - slow) <= 1e-9);
    }
}

TEST_CASE("instance separation holds for sampled instances of valid decompositions") {
    const std::vector<Ball> balls{{{0, 0}, 0.1}, {{1, 0}, 0.1}, {{60, 0}, 56}};
    const BallWspd w = compute_ball_wspd(balls, 1.0);

    std::vector<PreciseInstance> instances;
    instances.push_back(sample_instance(balls, SampleStrategy::centers));
    for (int i = 0; i < 100; ++i) {
        instances.push_back(sample_instance(balls, SampleStrategy::boundary_random, i));
    }
    const VerificationReport r = check_instance_separation(w, instances);
    CHECK(r.all_pass());

    // Degenerate balls reduce to the point decomposition.
    const std::vector<Ball> pts{{{0, 0}, 0}, {{1, 0}, 0}, {{4, 1}, 0}, {{9, 3}, 0}};
    const BallWspd wp = compute_ball_wspd(pts, 2.0);
    std::vector<PreciseInstance> centers{sample_instance(pts, SampleStrategy::centers)};
    CHECK(check_instance_separation(wp, centers).all_pass());

    const PreciseInstance wrong_size{std::vector<Point>{{0, 0}}};
    CHECK_THROWS_AS(check_instance_separation(wp, std::vector<PreciseInstance>{wrong_size}),
                    std::invalid_argument);
}

TEST_CASE("random clustered inputs pass the instance check across strategies") {
    const auto balls = generate_clustered_balls(90, 2, 13);
    const BallWspd w = compute_ball_wspd(balls, 2.0);
    std::vector<PreciseInstance> instances;
    for (int i = 0; i < 10; ++i) {
        instances.push_back(sample_instance(balls, SampleStrategy::uniform_random, i));
        instances.push_back(sample_instance(balls, SampleStrategy::boundary_random, 1000 + i));
    }
    CHECK(check_instance_separation(w, instances).all_pass());
}

TEST_CASE("tolerance override via environment") {
    CHECK(verification_tolerance() == 1e-9);
    setenv("IMPSPAN_TOLERANCE", "1e-6", 1);
    CHECK(verification_tolerance() == 1e-6);
    setenv("IMPSPAN_TOLERANCE", "bogus", 1);
    CHECK(verification_tolerance() == 1e-9);
    unsetenv("IMPSPAN_TOLERANCE");
    CHECK(verification_tolerance() == 1e-9);
}

TEST_CASE("report rendering carries status and margins") {
    VerificationReport r;
    r.add("alpha", true, 0.5, "fine");
    r.add("beta", true, 1e-8, "close");
    r.add("gamma", false, -0.25, "broken, detail");
    const std::string table = render_table(r);
    CHECK(table.find("alpha") != std::string::npos);
    CHECK(table.find("PASS") != std::string::npos);
    CHECK(table.find("WARN") != std::string::npos);
    CHECK(table.find("FAIL") != std::string::npos);

    const std::string csv = render_csv(r);
    CHECK(csv.find("check,pass,margin,detail") == 0);
    CHECK(csv.find("gamma,0,-0.25,broken; detail") != std::string::npos);
    CHECK_FALSE(r.all_pass());
}
