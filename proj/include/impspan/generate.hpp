#pragma once

#include <cstdint>
#include <vector>

#include "impspan/geometry.hpp"

namespace impspan {

// n pairwise disjoint balls with radii in [rmin, rmax], centers rejection
// sampled in a cube sized for comfortable density. radius_exponent > 1 skews
// radii toward rmin, giving strongly mixed sizes. Deterministic under seed.
// Throws after 1e6 * n failed placement attempts.
std::vector<Ball> generate_disjoint_balls(std::size_t n, std::size_t d, double rmin, double rmax,
                                          std::uint64_t seed, double radius_exponent = 1.0);

// Tight clusters of tiny balls with a large ball parked right next to every
// third cluster. The large balls dwarf the cluster extents while sitting at
// gaps comparable to them, which is the regime where the mixed-pair
// partition recursion actually fires.
std::vector<Ball> generate_clustered_balls(std::size_t n, std::size_t d, std::uint64_t seed);

}  // namespace impspan
