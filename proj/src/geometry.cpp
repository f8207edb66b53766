#include "impspan/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace impspan {

namespace {

void require_same_dim(const Point& a, const Point& b, const char* what) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    }
}

}  // namespace

double AxisBox::max_length() const {
    double m = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) m = std::max(m, length(i));
    return m;
}

double AxisBox::min_length() const {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < dim(); ++i) m = std::min(m, length(i));
    return m;
}

Point AxisBox::center() const {
    Point c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = 0.5 * (low[i] + high[i]);
    return c;
}

double squared_distance(const Point& a, const Point& b) {
    require_same_dim(a, b, "squared_distance");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        sum += diff * diff;
    }
    return sum;
}

double distance(const Point& a, const Point& b) {
    return std::sqrt(squared_distance(a, b));
}

double ball_distance(const Ball& a, const Ball& b) {
    require_same_dim(a.center, b.center, "ball_distance");
    return distance(a.center, b.center) - (a.radius + b.radius);
}

AxisBox bounding_box(std::span<const Point> points) {
    if (points.empty()) throw std::invalid_argument("bounding_box: empty input");
    AxisBox box{points.front(), points.front()};
    for (const Point& p : points.subspan(1)) {
        require_same_dim(p, box.low, "bounding_box");
        for (std::size_t i = 0; i < p.size(); ++i) {
            box.low[i] = std::min(box.low[i], p[i]);
            box.high[i] = std::max(box.high[i], p[i]);
        }
    }
    return box;
}

Ball enclosing_ball(const AxisBox& box) {
    const double d = static_cast<double>(box.dim());
    return Ball{box.center(), 0.5 * std::sqrt(d) * box.max_length()};
}

double unit_ball_volume_coeff(int d) {
    if (d <= 0) throw std::invalid_argument("unit_ball_volume_coeff: d must be positive");
    const double half = 0.5 * static_cast<double>(d);
    const double pi = 3.14159265358979323846;
    return std::pow(pi, half) / std::tgamma(half + 1.0);
}

bool pairwise_disjoint(std::span<const Ball> balls) {
    for (std::size_t i = 0; i < balls.size(); ++i) {
        for (std::size_t j = i + 1; j < balls.size(); ++j) {
            if (ball_distance(balls[i], balls[j]) <= 0.0) return false;
        }
    }
    return true;
}

}  // namespace impspan
