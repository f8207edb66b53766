#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "impspan/lower_bound.hpp"

using namespace impspan;

TEST_CASE("segment endpoints land on the two circles") {
    const auto segs = generate_radial_segments(8, 3.0);
    REQUIRE(segs.size() == 8);
    for (const Segment& s : segs) {
        CHECK(std::hypot(s.p[0], s.p[1]) == doctest::Approx(0.4).epsilon(1e-14));
        CHECK(std::hypot(s.q[0], s.q[1]) == doctest::Approx(2.0).epsilon(1e-14));
        // Segment length (t+1)/2 - 0.4 exceeds t/2.
        CHECK(distance(s.p, s.q) == doctest::Approx(1.6).epsilon(1e-13));
        CHECK(distance(s.p, s.q) > 1.5);
    }

    const auto four = generate_radial_segments(4, 2.0);
    CHECK(four[0].q[0] == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(four[0].q[1] == doctest::Approx(0.0));
    CHECK(four[0].p[0] == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(four[1].p[0] == doctest::Approx(0.0));
    CHECK(four[1].p[1] == doctest::Approx(0.4).epsilon(1e-15));

    CHECK_THROWS_AS(generate_radial_segments(1, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(generate_radial_segments(8, 1.0), std::invalid_argument);
}

TEST_CASE("inner endpoints cluster while detours stay long") {
    for (const auto& [n, t] : {std::pair<int, double>{4, 2.0}, {8, 1.5}, {16, 3.0}}) {
        const auto segs = generate_radial_segments(n, t);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                CHECK(distance(segs[i].p, segs[j].p) <= 0.8 + 1e-12);
                CHECK(distance(segs[i].p, segs[j].q) > t / 2.0);
            }
        }
    }
}

TEST_CASE("adversarial instance picks the right endpoints") {
    const auto segs = generate_radial_segments(4, 2.0);
    const PreciseInstance inst = adversarial_instance(segs, 0, 1);
    CHECK(inst.points[0] == segs[0].p);
    CHECK(inst.points[1] == segs[1].p);
    CHECK(inst.points[2] == segs[2].q);
    CHECK(inst.points[3] == segs[3].q);

    const auto two = generate_radial_segments(2, 2.0);
    const PreciseInstance pair = adversarial_instance(two, 0, 1);
    CHECK(pair.points[0] == two[0].p);
    CHECK(pair.points[1] == two[1].p);

    CHECK_THROWS_AS(adversarial_instance(segs, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(adversarial_instance(segs, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(adversarial_instance(segs, 0, 4), std::invalid_argument);
}

TEST_CASE("every removed edge breaks the stretch bound") {
    for (const auto& [n, t] : {std::pair<int, double>{4, 2.0}, {8, 1.5}}) {
        const LowerBoundReport report = verify_completeness_required(n, t);
        CHECK(report.cases.size() == static_cast<std::size_t>(n * (n - 1) / 2));
        CHECK(report.all_pass());
        CHECK(report.failures() == 0);
        for (const RemovedEdgeCase& c : report.cases) {
            CHECK(c.shortest_margin > 0.0);
            CHECK(c.detour_margin >= c.shortest_margin);
        }
    }
    CHECK_THROWS_AS(verify_completeness_required(2, 2.0), std::invalid_argument);
}

TEST_CASE("the parallel sweep agrees with the serial one") {
    const LowerBoundReport serial = verify_completeness_required(8, 2.0, 1);
    const LowerBoundReport parallel = verify_completeness_required(8, 2.0, 4);
    REQUIRE(serial.cases.size() == parallel.cases.size());
    for (std::size_t i = 0; i < serial.cases.size(); ++i) {
        CHECK(serial.cases[i].shortest_margin == parallel.cases[i].shortest_margin);
    }
}
