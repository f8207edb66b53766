#include "impspan/generate.hpp"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace impspan {

namespace {

// Key of the grid cell holding p, folded to a single 64-bit value.
std::uint64_t cell_key(const Point& p, double cell) {
    std::uint64_t h = 1469598103934665603ull;
    for (double x : p) {
        const auto c = static_cast<std::int64_t>(std::floor(x / cell));
        h ^= static_cast<std::uint64_t>(c);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

std::vector<Ball> generate_disjoint_balls(std::size_t n, std::size_t d, double rmin, double rmax,
                                          std::uint64_t seed, double radius_exponent) {
    if (n < 1 || d < 1) throw std::invalid_argument("generate_disjoint_balls: need n >= 1, d >= 1");
    if (rmin < 0.0 || rmax < rmin) throw std::invalid_argument("generate_disjoint_balls: bad radius range");
    if (radius_exponent <= 0.0) throw std::invalid_argument("generate_disjoint_balls: bad exponent");

    // Cube sized so balls inflated to rmax occupy roughly 15% of the volume.
    double side;
    if (rmax > 0.0) {
        const double occupied = static_cast<double>(n) * unit_ball_volume_coeff(static_cast<int>(d)) *
                                std::pow(2.0 * rmax, static_cast<double>(d));
        side = std::pow(occupied / 0.15, 1.0 / static_cast<double>(d));
    } else {
        side = std::max(1.0, std::pow(static_cast<double>(n), 1.0 / static_cast<double>(d)));
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<Ball> balls;
    balls.reserve(n);

    if (rmax == 0.0) {
        // Degenerate balls are points; disjoint means distinct.
        std::set<Point> seen;
        std::uint64_t attempts = 0;
        const std::uint64_t cap = 1000000ull * n;
        while (balls.size() < n) {
            if (++attempts > cap) {
                throw std::runtime_error("generate_disjoint_balls: rejection failed; enlarge the domain");
            }
            Point c(d);
            for (double& x : c) x = side * unit(rng);
            if (!seen.insert(c).second) continue;
            balls.push_back(Ball{std::move(c), 0.0});
        }
        return balls;
    }

    const double cell = 2.0 * rmax;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> grid;
    std::uint64_t attempts = 0;
    const std::uint64_t cap = 1000000ull * n;

    std::vector<std::int64_t> lo(d), hi(d);
    while (balls.size() < n) {
        if (++attempts > cap) {
            throw std::runtime_error("generate_disjoint_balls: rejection failed; enlarge the domain");
        }
        Ball b;
        b.radius = rmin + (rmax - rmin) * std::pow(unit(rng), radius_exponent);
        b.center.resize(d);
        for (double& x : b.center) x = side * unit(rng);

        // Overlap candidates sit within one cell ring.
        bool ok = true;
        for (std::size_t i = 0; i < d; ++i) {
            const auto c = static_cast<std::int64_t>(std::floor(b.center[i] / cell));
            lo[i] = c - 1;
            hi[i] = c + 1;
        }
        std::vector<std::int64_t> cur = lo;
        while (ok) {
            std::uint64_t h = 1469598103934665603ull;
            for (std::size_t i = 0; i < d; ++i) {
                h ^= static_cast<std::uint64_t>(cur[i]);
                h *= 1099511628211ull;
            }
            if (auto it = grid.find(h); it != grid.end()) {
                for (std::uint32_t j : it->second) {
                    if (ball_distance(b, balls[j]) <= 0.0) {
                        ok = false;
                        break;
                    }
                }
            }
            std::size_t i = 0;
            for (; i < d; ++i) {
                if (cur[i] < hi[i]) {
                    ++cur[i];
                    break;
                }
                cur[i] = lo[i];
            }
            if (i == d) break;
        }
        if (!ok) continue;

        grid[cell_key(b.center, cell)].push_back(static_cast<std::uint32_t>(balls.size()));
        balls.push_back(std::move(b));
    }
    return balls;
}

std::vector<Ball> generate_clustered_balls(std::size_t n, std::size_t d, std::uint64_t seed) {
    if (n < 1 || d < 1) throw std::invalid_argument("generate_clustered_balls: need n >= 1, d >= 1");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    const double site_spacing = 3.0;
    const double spread = 0.01;  // cluster extent per axis
    const double sqrt_d = std::sqrt(static_cast<double>(d));

    const std::size_t cluster_count = (n + 7) / 8;
    const std::size_t per_axis =
        static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(cluster_count),
                                                    1.0 / static_cast<double>(d))));

    std::vector<Ball> balls;
    balls.reserve(n);

    for (std::size_t ci = 0; ci < cluster_count && balls.size() < n; ++ci) {
        Point site(d);
        std::size_t rem = ci;
        for (std::size_t i = 0; i < d; ++i) {
            site[i] = site_spacing * static_cast<double>(rem % per_axis);
            rem /= per_axis;
        }

        const std::size_t members = 2 + static_cast<std::size_t>(rng() % 5);
        std::vector<Ball> cluster;
        double radius_scale = spread * 0.02;
        for (std::size_t m = 0; m < members && balls.size() + cluster.size() < n; ++m) {
            int tries = 0;
            while (true) {
                Ball b;
                b.radius = radius_scale * unit(rng);
                b.center = site;
                for (std::size_t i = 0; i < d; ++i) b.center[i] += spread * (2.0 * unit(rng) - 1.0);
                bool ok = true;
                for (const Ball& other : cluster) {
                    if (ball_distance(b, other) <= 0.0) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    cluster.push_back(std::move(b));
                    break;
                }
                if (++tries > 200) {
                    radius_scale *= 0.5;
                    tries = 0;
                }
            }
        }
        balls.insert(balls.end(), cluster.begin(), cluster.end());

        // A large ball parked just outside every third cluster.
        if (ci % 3 == 0 && balls.size() < n) {
            Ball giant;
            giant.radius = 0.3 + 0.1 * unit(rng);
            Point dir(d);
            double norm2 = 0.0;
            do {
                norm2 = 0.0;
                for (std::size_t i = 0; i < d; ++i) {
                    dir[i] = gauss(rng);
                    norm2 += dir[i] * dir[i];
                }
            } while (norm2 <= 1e-300);
            const double inv = 1.0 / std::sqrt(norm2);
            const double gap = spread * (0.5 + unit(rng));
            const double offset = giant.radius + spread * sqrt_d + gap;
            giant.center = site;
            for (std::size_t i = 0; i < d; ++i) giant.center[i] += offset * dir[i] * inv;
            balls.push_back(std::move(giant));
        }
    }

    // Top up with lone points far outside the cluster lattice if the cluster
    // budget rounded short.
    const double far = site_spacing * static_cast<double>(per_axis + 2);
    while (balls.size() < n) {
        Ball b;
        b.center.assign(d, far);
        b.center[0] += static_cast<double>(balls.size()) * 0.5 + unit(rng) * 0.1;
        b.radius = 0.05 * unit(rng);
        balls.push_back(std::move(b));
    }
    return balls;
}

}  // namespace impspan
