#include "impspan/lower_bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "impspan/parallel.hpp"

namespace impspan {

std::vector<Segment> generate_radial_segments(int n, double t) {
    if (n < 2) throw std::invalid_argument("generate_radial_segments: n must be at least 2");
    if (t <= 1.0) throw std::invalid_argument("generate_radial_segments: t must exceed 1");
    const double inner = 0.4;
    const double outer = 0.5 * (t + 1.0);
    const double theta = 2.0 * 3.14159265358979323846 / static_cast<double>(n);
    std::vector<Segment> segs;
    segs.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double c = std::cos(theta * i);
        const double s = std::sin(theta * i);
        segs.push_back(Segment{Point{inner * c, inner * s}, Point{outer * c, outer * s}});
    }
    return segs;
}

PreciseInstance adversarial_instance(std::span<const Segment> segments, int i, int j) {
    const int n = static_cast<int>(segments.size());
    if (i == j) throw std::invalid_argument("adversarial_instance: i and j must differ");
    if (i < 0 || j < 0 || i >= n || j >= n || i > j) {
        throw std::invalid_argument("adversarial_instance: need 0 <= i < j < n");
    }
    PreciseInstance inst;
    inst.points.reserve(segments.size());
    for (int k = 0; k < n; ++k) {
        inst.points.push_back(k == i || k == j ? segments[k].p : segments[k].q);
    }
    return inst;
}

bool LowerBoundReport::all_pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const RemovedEdgeCase& c) { return c.pass; });
}

std::size_t LowerBoundReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [](const RemovedEdgeCase& c) { return !c.pass; }));
}

LowerBoundReport verify_completeness_required(int n, double t, int threads) {
    if (n < 3) throw std::invalid_argument("verify_completeness_required: n must be at least 3");
    const std::vector<Segment> segs = generate_radial_segments(n, t);

    std::vector<std::pair<int, int>> index_pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) index_pairs.emplace_back(i, j);
    }

    LowerBoundReport report;
    report.n = n;
    report.t = t;
    report.cases.resize(index_pairs.size());

    parallel_for(0, index_pairs.size(), threads, [&](std::size_t c) {
        const auto [i, j] = index_pairs[c];
        const PreciseInstance inst = adversarial_instance(segs, i, j);

        // Complete graph minus the edge under test.
        std::vector<Edge> edges;
        edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 - 1);
        for (std::uint32_t u = 0; u < static_cast<std::uint32_t>(n); ++u) {
            for (std::uint32_t v = u + 1; v < static_cast<std::uint32_t>(n); ++v) {
                if (static_cast<int>(u) == i && static_cast<int>(v) == j) continue;
                edges.emplace_back(u, v);
            }
        }
        const InstanceGraph g(inst.points, edges);
        const std::vector<double> dist = shortest_paths_from(g, static_cast<std::uint32_t>(i));
        const double direct = distance(inst.points[i], inst.points[j]);

        double best_detour = std::numeric_limits<double>::infinity();
        for (int k = 0; k < n; ++k) {
            if (k == i || k == j) continue;
            const double via = distance(inst.points[i], inst.points[k]) +
                               distance(inst.points[k], inst.points[j]);
            best_detour = std::min(best_detour, via);
        }

        RemovedEdgeCase& rc = report.cases[c];
        rc.i = i;
        rc.j = j;
        rc.detour_margin = best_detour / direct - t;
        rc.shortest_margin = dist[j] / direct - t;
        rc.pass = rc.shortest_margin > 0.0;
    });
    return report;
}

}  // namespace impspan
