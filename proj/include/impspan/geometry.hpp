#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace impspan {

// A point in R^d. The dimension is carried by the dataset, not fixed globally.
using Point = std::vector<double>;

// A d-dimensional ball; radius 0 means the ball is a point.
struct Ball {
    Point center;
    double radius = 0.0;
};

// Axis-parallel hyperrectangle, componentwise low <= high.
struct AxisBox {
    Point low;
    Point high;

    std::size_t dim() const { return low.size(); }
    double length(std::size_t i) const { return high[i] - low[i]; }
    double max_length() const;
    double min_length() const;
    Point center() const;
};

double squared_distance(const Point& a, const Point& b);
double distance(const Point& a, const Point& b);

// Signed gap between two balls: center distance minus the sum of radii.
// Negative when the balls overlap, zero when they are tangent.
double ball_distance(const Ball& a, const Ball& b);

// Tight bounding box: every face is attained by some input point.
AxisBox bounding_box(std::span<const Point> points);

// Ball centered at the box center with radius (sqrt(d)/2) * L_max(box).
// The half-diagonal never exceeds that radius, so the ball contains the box.
Ball enclosing_ball(const AxisBox& box);

// pi^(d/2) / Gamma(d/2 + 1), the volume of the d-dimensional unit ball.
double unit_ball_volume_coeff(int d);

// Strict disjointness: every pair has positive gap. Tangent balls fail.
bool pairwise_disjoint(std::span<const Ball> balls);

}  // namespace impspan
