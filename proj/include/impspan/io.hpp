#pragma once

#include <string>
#include <vector>

#include "impspan/lower_bound.hpp"
#include "impspan/spanner.hpp"
#include "impspan/wspd_balls.hpp"

namespace impspan {

// Doubles are written with 17 significant digits so that parse(write(x))
// reproduces x bit for bit.
std::string format_double(double x);

// Ball file: header "dim d", then one ball per line, d center coordinates
// followed by the radius, space separated.
std::string write_ball_file(std::span<const Ball> balls);
std::vector<Ball> parse_ball_file(const std::string& text);

// Loads and validates: finite values, radii >= 0, pairwise disjoint.
// Violations throw with the offending ball ids in the message.
std::vector<Ball> read_ball_file(const std::string& path);
void write_ball_file(const std::string& path, std::span<const Ball> balls);

// One pair per line: "A: id,id,... | B: id,id,... | category". Ids ascend
// within each side, the side with the smaller minimum comes first, and lines
// are sorted, so output is canonical.
std::string write_pair_dump(const BallWspd& wspd);

// One edge per line, "i j" with i < j.
std::string write_edge_list(std::span<const Edge> edges);
std::vector<Edge> parse_edge_list(const std::string& text);

// One point per line, coordinates space separated.
std::string write_instance(const PreciseInstance& instance);

// One segment per line: "px py qx qy".
std::string write_segments(std::span<const Segment> segments);

// Removed-edge report: header "i,j,margin", one case per line.
std::string write_lower_bound_csv(const LowerBoundReport& report);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace impspan
