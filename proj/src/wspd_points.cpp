#include "impspan/wspd_points.hpp"

#include <algorithm>
#include <stdexcept>

namespace impspan {

std::vector<NodePair> compute_point_wspd(const SplitTree& t, double s) {
    if (s <= 0.0) throw std::invalid_argument("compute_point_wspd: s must be positive");
    std::vector<NodePair> pairs;
    for_each_point_pair(t, s, [&](NodeId a, NodeId b) { pairs.push_back({a, b}); });
    return pairs;
}

std::vector<std::uint32_t> sorted_ids(const SplitTree& t, NodeId u) {
    auto span = t.ids(u);
    std::vector<std::uint32_t> ids(span.begin(), span.end());
    std::sort(ids.begin(), ids.end());
    return ids;
}

}  // namespace impspan
