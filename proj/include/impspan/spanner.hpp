#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "impspan/geometry.hpp"
#include "impspan/wspd_balls.hpp"

namespace impspan {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

// Edge set over ball ids whose every precise instance is a t-spanner.
struct ImpreciseSpanner {
    double t = 0.0;
    double s = 0.0;              // separation the decomposition was built at
    std::size_t wspd_size = 0;   // pairs before representative dedup
    std::vector<Edge> edges;     // i < j, sorted, duplicates removed
};

// One edge per decomposition pair at s = 4(t+1)/(t-1), connecting the
// minimum ball id of each side. Requires t > 1 and pairwise disjoint balls.
ImpreciseSpanner build_imprecise_spanner(std::span<const Ball> balls, double t,
                                         FindPairsStats* stats = nullptr);

// Representative edges of an existing decomposition: minimum id of each
// side, ordered, deduplicated.
std::vector<Edge> spanner_edges(const BallWspd& wspd);

enum class SampleStrategy {
    centers,          // p_i = c_i
    uniform_random,   // uniform inside each ball
    boundary_random,  // uniform on each sphere
};

SampleStrategy parse_strategy(std::string_view name);
std::string_view strategy_name(SampleStrategy strategy);

// One point chosen from each ball.
struct PreciseInstance {
    std::vector<Point> points;
};

PreciseInstance sample_instance(std::span<const Ball> balls, SampleStrategy strategy,
                                std::uint64_t seed = 0);

// Every point within tolerance of its ball.
bool instance_valid(std::span<const Ball> balls, const PreciseInstance& instance,
                    double tolerance = 1e-12);

// Geometric graph on instance points; edge weights are exact Euclidean
// distances, stored in CSR form for traversal.
class InstanceGraph {
public:
    InstanceGraph(std::vector<Point> points, std::span<const Edge> edges);

    std::size_t vertex_count() const { return points_.size(); }
    std::span<const Point> points() const { return points_; }
    std::span<const Edge> edges() const { return edges_; }

    std::span<const std::uint32_t> neighbors(std::uint32_t v) const;
    std::span<const double> weights(std::uint32_t v) const;

private:
    std::vector<Point> points_;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> offsets_;
    std::vector<std::uint32_t> adjacency_;
    std::vector<double> weights_;
};

InstanceGraph make_instance_graph(const PreciseInstance& instance, std::span<const Edge> edges);

// Shortest-path distances from one source (nonnegative weights, binary heap).
// Unreachable vertices get +infinity.
std::vector<double> shortest_paths_from(const InstanceGraph& g, std::uint32_t source);

struct DilationResult {
    double value = 1.0;            // +infinity when disconnected
    bool connected = true;
    std::uint64_t skipped_pairs = 0;  // coincident endpoints, flagged and skipped
    std::uint32_t worst_u = 0;
    std::uint32_t worst_v = 0;
};

// Max over vertex pairs of shortest-path distance over Euclidean distance.
// Graphs with fewer than two vertices have dilation 1.
DilationResult dilation(const InstanceGraph& g, int threads = 1);

}  // namespace impspan
