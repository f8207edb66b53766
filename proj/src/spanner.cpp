#include "impspan/spanner.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstring>
#include <cmath>
#include <limits>
#include <mutex>
#include <queue>
#include <random>
#include <stdexcept>

#include "impspan/parallel.hpp"

namespace impspan {

std::vector<Edge> spanner_edges(const BallWspd& wspd) {
    const std::vector<std::uint32_t> mins = min_id_per_node(wspd.tree());
    std::vector<std::uint64_t> packed;
    packed.reserve(wspd.size());
    for (const BallWspdEntry& e : wspd.entries()) {
        std::uint32_t i = mins[e.a];
        std::uint32_t j = mins[e.b];
        if (i > j) std::swap(i, j);
        packed.push_back((static_cast<std::uint64_t>(i) << 32) | j);
    }
    std::sort(packed.begin(), packed.end());
    packed.erase(std::unique(packed.begin(), packed.end()), packed.end());
    std::vector<Edge> edges;
    edges.reserve(packed.size());
    for (std::uint64_t pk : packed) {
        edges.emplace_back(static_cast<std::uint32_t>(pk >> 32),
                           static_cast<std::uint32_t>(pk & 0xffffffffu));
    }
    return edges;
}

ImpreciseSpanner build_imprecise_spanner(std::span<const Ball> balls, double t,
                                         FindPairsStats* stats) {
    if (t <= 1.0) throw std::invalid_argument("build_imprecise_spanner: t must exceed 1");
    const double s = 4.0 * (t + 1.0) / (t - 1.0);

    ImpreciseSpanner sp;
    sp.t = t;
    sp.s = s;
    if (balls.size() < 2) return sp;

    // Stream the decomposition instead of materializing it; collect edges in
    // fixed-size chunks so the pair count never has to be known up front and
    // peak memory stays near one word per pair.
    const SplitTree tree = prepare_wspd_tree(balls, s);
    const std::vector<std::uint32_t> mins = min_id_per_node(tree);

    constexpr std::size_t kChunk = std::size_t{1} << 25;
    std::vector<std::vector<Edge>> chunks;
    chunks.emplace_back();
    chunks.back().reserve(std::min(kChunk, 4 * balls.size()));
    for_each_ball_pair(tree, balls, s, [&](NodeId a, NodeId b, PairCategory) {
        std::uint32_t i = mins[a];
        std::uint32_t j = mins[b];
        if (i > j) std::swap(i, j);
        if (chunks.back().size() == kChunk) {
            chunks.emplace_back();
            chunks.back().reserve(kChunk);
        }
        chunks.back().emplace_back(i, j);
    }, stats);

    std::size_t total = 0;
    for (const auto& c : chunks) total += c.size();
    sp.wspd_size = total;
    sp.edges.reserve(total);
    for (auto& c : chunks) {
        sp.edges.insert(sp.edges.end(), c.begin(), c.end());
        std::vector<Edge>().swap(c);
    }
    chunks.clear();

    // A duplicate representative edge would mean some ball pair is covered
    // twice, so for a valid decomposition unique() removes nothing. The
    // comparator works on the raw 8-byte image, which keeps the sort cheap
    // and still orders by (first, second).
    const auto edge_key = [](const Edge& e) {
        std::uint64_t raw;
        std::memcpy(&raw, &e, sizeof raw);
        if constexpr (std::endian::native == std::endian::little) raw = __builtin_bswap64(raw);
        return raw;
    };
    std::sort(sp.edges.begin(), sp.edges.end(),
              [&](const Edge& x, const Edge& y) { return edge_key(x) < edge_key(y); });
    sp.edges.erase(std::unique(sp.edges.begin(), sp.edges.end()), sp.edges.end());
    return sp;
}

SampleStrategy parse_strategy(std::string_view name) {
    if (name == "centers") return SampleStrategy::centers;
    if (name == "uniform-random" || name == "uniform") return SampleStrategy::uniform_random;
    if (name == "boundary-random" || name == "boundary") return SampleStrategy::boundary_random;
    throw std::invalid_argument("unknown sampling strategy: " + std::string(name));
}

std::string_view strategy_name(SampleStrategy strategy) {
    switch (strategy) {
        case SampleStrategy::centers: return "centers";
        case SampleStrategy::uniform_random: return "uniform-random";
        case SampleStrategy::boundary_random: return "boundary-random";
    }
    return "?";
}

namespace {

// Uniform direction via normalized gaussians; resample the (measure-zero)
// near-null draws.
Point random_direction(std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Point dir(d);
    while (true) {
        double norm2 = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            dir[i] = gauss(rng);
            norm2 += dir[i] * dir[i];
        }
        if (norm2 > 1e-300) {
            const double inv = 1.0 / std::sqrt(norm2);
            for (double& x : dir) x *= inv;
            return dir;
        }
    }
}

}  // namespace

PreciseInstance sample_instance(std::span<const Ball> balls, SampleStrategy strategy,
                                std::uint64_t seed) {
    PreciseInstance inst;
    inst.points.reserve(balls.size());
    if (strategy == SampleStrategy::centers) {
        for (const Ball& b : balls) inst.points.push_back(b.center);
        return inst;
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (const Ball& b : balls) {
        const std::size_t d = b.center.size();
        if (b.radius == 0.0) {
            inst.points.push_back(b.center);
            continue;
        }
        Point dir = random_direction(d, rng);
        double r = b.radius;
        if (strategy == SampleStrategy::uniform_random) {
            r *= std::pow(unit(rng), 1.0 / static_cast<double>(d));
        }
        Point p = b.center;
        for (std::size_t i = 0; i < d; ++i) p[i] += r * dir[i];
        inst.points.push_back(std::move(p));
    }
    return inst;
}

bool instance_valid(std::span<const Ball> balls, const PreciseInstance& instance, double tolerance) {
    if (instance.points.size() != balls.size()) return false;
    for (std::size_t i = 0; i < balls.size(); ++i) {
        if (distance(instance.points[i], balls[i].center) > balls[i].radius + tolerance) return false;
    }
    return true;
}

InstanceGraph::InstanceGraph(std::vector<Point> points, std::span<const Edge> edges)
    : points_(std::move(points)), edges_(edges.begin(), edges.end()) {
    const std::size_t n = points_.size();
    offsets_.assign(n + 1, 0);
    for (const Edge& e : edges_) {
        if (e.first >= n || e.second >= n) throw std::invalid_argument("InstanceGraph: edge endpoint out of range");
        if (e.first == e.second) throw std::invalid_argument("InstanceGraph: self-loop");
        ++offsets_[e.first + 1];
        ++offsets_[e.second + 1];
    }
    for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];

    adjacency_.resize(2 * edges_.size());
    weights_.resize(2 * edges_.size());
    std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges_) {
        const double w = distance(points_[e.first], points_[e.second]);
        adjacency_[cursor[e.first]] = e.second;
        weights_[cursor[e.first]++] = w;
        adjacency_[cursor[e.second]] = e.first;
        weights_[cursor[e.second]++] = w;
    }
}

std::span<const std::uint32_t> InstanceGraph::neighbors(std::uint32_t v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::span<const double> InstanceGraph::weights(std::uint32_t v) const {
    return {weights_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

InstanceGraph make_instance_graph(const PreciseInstance& instance, std::span<const Edge> edges) {
    return InstanceGraph(instance.points, edges);
}

std::vector<double> shortest_paths_from(const InstanceGraph& g, std::uint32_t source) {
    const std::size_t n = g.vertex_count();
    if (source >= n) throw std::invalid_argument("shortest_paths_from: bad source");
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    dist[source] = 0.0;

    using Item = std::pair<double, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.push({0.0, source});
    while (!heap.empty()) {
        const auto [dv, v] = heap.top();
        heap.pop();
        if (dv > dist[v]) continue;
        const auto nbrs = g.neighbors(v);
        const auto wts = g.weights(v);
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            const double cand = dv + wts[k];
            if (cand < dist[nbrs[k]]) {
                dist[nbrs[k]] = cand;
                heap.push({cand, nbrs[k]});
            }
        }
    }
    return dist;
}

DilationResult dilation(const InstanceGraph& g, int threads) {
    const std::size_t n = g.vertex_count();
    DilationResult best;
    if (n < 2) return best;
    best.value = 0.0;

    std::mutex merge_mutex;
    std::atomic<std::uint64_t> skipped{0};
    parallel_for(0, n, threads, [&](std::size_t u) {
        const std::vector<double> dist = shortest_paths_from(g, static_cast<std::uint32_t>(u));
        DilationResult local;
        local.value = 0.0;
        std::uint64_t local_skipped = 0;
        for (std::size_t v = u + 1; v < n; ++v) {
            const double euclid = distance(g.points()[u], g.points()[v]);
            if (euclid == 0.0) {
                ++local_skipped;
                continue;
            }
            const double ratio = dist[v] / euclid;  // +inf when unreachable
            if (ratio > local.value) {
                local.value = ratio;
                local.worst_u = static_cast<std::uint32_t>(u);
                local.worst_v = static_cast<std::uint32_t>(v);
            }
        }
        skipped += local_skipped;
        std::lock_guard<std::mutex> lock(merge_mutex);
        if (local.value > best.value) {
            best.value = local.value;
            best.worst_u = local.worst_u;
            best.worst_v = local.worst_v;
        }
    });

    best.skipped_pairs = skipped.load();
    best.connected = std::isfinite(best.value);
    if (best.value == 0.0) best.value = 1.0;  // every pair coincident
    return best;
}

}  // namespace impspan
