#include "impspan/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace impspan {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string write_ball_file(std::span<const Ball> balls) {
    if (balls.empty()) throw std::invalid_argument("write_ball_file: empty ball set");
    std::string out = "dim " + std::to_string(balls.front().center.size()) + "\n";
    for (const Ball& b : balls) {
        for (double c : b.center) {
            out += format_double(c);
            out += ' ';
        }
        out += format_double(b.radius);
        out += '\n';
    }
    return out;
}

std::vector<Ball> parse_ball_file(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    std::size_t dim = 0;
    if (!(in >> tag >> dim) || tag != "dim" || dim == 0) {
        throw std::invalid_argument("ball file: expected header \"dim d\"");
    }

    std::vector<Ball> balls;
    while (true) {
        Ball b;
        b.center.resize(dim);
        if (!(in >> b.center[0])) break;
        for (std::size_t i = 1; i < dim; ++i) {
            if (!(in >> b.center[i])) throw std::invalid_argument("ball file: truncated line");
        }
        if (!(in >> b.radius)) throw std::invalid_argument("ball file: missing radius");
        for (double c : b.center) {
            if (!std::isfinite(c)) throw std::invalid_argument("ball file: non-finite coordinate");
        }
        if (!std::isfinite(b.radius) || b.radius < 0.0) {
            throw std::invalid_argument("ball file: ball " + std::to_string(balls.size()) +
                                        " has invalid radius");
        }
        balls.push_back(std::move(b));
    }
    if (balls.empty()) throw std::invalid_argument("ball file: no balls");
    return balls;
}

std::vector<Ball> read_ball_file(const std::string& path) {
    std::vector<Ball> balls = parse_ball_file(read_text_file(path));
    if (auto bad = find_overlapping_pair(balls)) {
        throw std::invalid_argument(path + ": balls " + std::to_string(bad->first) + " and " +
                                    std::to_string(bad->second) + " are not disjoint");
    }
    return balls;
}

void write_ball_file(const std::string& path, std::span<const Ball> balls) {
    write_text_file(path, write_ball_file(balls));
}

std::string write_pair_dump(const BallWspd& wspd) {
    std::vector<std::string> lines;
    lines.reserve(wspd.size());
    for (std::size_t i = 0; i < wspd.size(); ++i) {
        BallPair p = wspd.materialize(i);
        if (p.b.front() < p.a.front()) std::swap(p.a, p.b);
        std::string line = "A: ";
        for (std::size_t k = 0; k < p.a.size(); ++k) {
            if (k) line += ',';
            line += std::to_string(p.a[k]);
        }
        line += " | B: ";
        for (std::size_t k = 0; k < p.b.size(); ++k) {
            if (k) line += ',';
            line += std::to_string(p.b[k]);
        }
        line += " | ";
        line += p.category == PairCategory::direct ? "direct" : "partitioned";
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const std::string& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

std::string write_edge_list(std::span<const Edge> edges) {
    std::string out;
    for (const Edge& e : edges) {
        const auto [lo, hi] = std::minmax(e.first, e.second);
        out += std::to_string(lo);
        out += ' ';
        out += std::to_string(hi);
        out += '\n';
    }
    return out;
}

std::vector<Edge> parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::vector<Edge> edges;
    std::uint32_t a = 0, b = 0;
    while (in >> a >> b) edges.emplace_back(a, b);
    return edges;
}

std::string write_instance(const PreciseInstance& instance) {
    std::string out;
    for (const Point& p : instance.points) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out += ' ';
            out += format_double(p[i]);
        }
        out += '\n';
    }
    return out;
}

std::string write_segments(std::span<const Segment> segments) {
    std::string out;
    for (const Segment& s : segments) {
        out += format_double(s.p[0]) + " " + format_double(s.p[1]) + " " +
               format_double(s.q[0]) + " " + format_double(s.q[1]) + "\n";
    }
    return out;
}

std::string write_lower_bound_csv(const LowerBoundReport& report) {
    std::string out = "i,j,margin\n";
    for (const RemovedEdgeCase& c : report.cases) {
        out += std::to_string(c.i) + "," + std::to_string(c.j) + "," +
               format_double(c.shortest_margin) + "\n";
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace impspan
