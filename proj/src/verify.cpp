#include "impspan/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace impspan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_margin(double m) {
    if (m == kInf) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", m + 0.0);  // folds -0 into 0
    return buf;
}

}  // namespace

double verification_tolerance() {
    if (const char* env = std::getenv("IMPSPAN_TOLERANCE")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && std::isfinite(v) && v >= 0.0) return v;
    }
    return 1e-9;
}

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckItem& c) { return c.pass; });
}

void VerificationReport::add(std::string name, bool pass, double margin, std::string detail,
                             double warn_below) {
    checks.push_back(CheckItem{std::move(name), pass, margin, std::move(detail), warn_below});
}

void VerificationReport::merge(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string render_table(const VerificationReport& report) {
    std::size_t width = 4;
    for (const CheckItem& c : report.checks) width = std::max(width, c.name.size());
    std::string out;
    for (const CheckItem& c : report.checks) {
        const char* status = c.pass ? (c.margin < c.warn_below ? "WARN" : "PASS") : "FAIL";
        out += c.name;
        out.append(width - c.name.size() + 2, ' ');
        out += status;
        out += "  margin=";
        out += format_margin(c.margin);
        if (!c.detail.empty()) {
            out += "  ";
            out += c.detail;
        }
        out += '\n';
    }
    return out;
}

std::string render_csv(const VerificationReport& report) {
    std::string out = "check,pass,margin,detail\n";
    for (const CheckItem& c : report.checks) {
        std::string detail = c.detail;
        std::replace(detail.begin(), detail.end(), ',', ';');
        out += c.name + "," + (c.pass ? "1" : "0") + "," + format_margin(c.margin) + "," + detail + "\n";
    }
    return out;
}

VerificationReport check_coverage(std::span<const IdSetPair> pairs, std::size_t n) {
    for (const IdSetPair& pr : pairs) {
        for (std::uint32_t id : pr.first) {
            if (id >= n) throw std::invalid_argument("check_coverage: id out of range");
        }
        for (std::uint32_t id : pr.second) {
            if (id >= n) throw std::invalid_argument("check_coverage: id out of range");
        }
    }

    std::vector<std::uint32_t> count(n * n, 0);
    for (const IdSetPair& pr : pairs) {
        for (std::uint32_t p : pr.first) {
            for (std::uint32_t q : pr.second) {
                if (p == q) {
                    VerificationReport bad;
                    bad.add("coverage", false, 0.0, "pair sides share id " + std::to_string(p));
                    return bad;
                }
                const auto [lo, hi] = std::minmax(p, q);
                ++count[static_cast<std::size_t>(lo) * n + hi];
            }
        }
    }

    VerificationReport report;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const std::uint32_t c = count[p * n + q];
            if (c != 1) {
                report.add("coverage", false, 0.0,
                           "ids (" + std::to_string(p) + "," + std::to_string(q) + ") covered " +
                               std::to_string(c) + " times");
                return report;
            }
        }
    }
    report.add("coverage", true, kInf,
               std::to_string(pairs.size()) + " pairs cover all " +
                   std::to_string(n * (n - 1) / 2) + " id pairs exactly once");
    return report;
}

VerificationReport check_coverage(const BallWspd& wspd) {
    std::vector<IdSetPair> pairs;
    pairs.reserve(wspd.size());
    for (std::size_t i = 0; i < wspd.size(); ++i) {
        BallPair p = wspd.materialize(i);
        pairs.emplace_back(std::move(p.a), std::move(p.b));
    }
    return check_coverage(pairs, wspd.balls().size());
}

VerificationReport check_separation(const BallWspd& wspd, double tolerance) {
    double worst = kInf;
    std::size_t worst_index = 0;
    for (std::size_t i = 0; i < wspd.size(); ++i) {
        const BallPair p = wspd.materialize(i);
        const double margin = ball_pair_separation_margin(p.a, p.b, wspd.balls(), wspd.separation());
        if (margin < worst) {
            worst = margin;
            worst_index = i;
        }
    }
    VerificationReport report;
    const bool pass = worst >= -tolerance;
    report.add("separation", pass, worst,
               wspd.size() ? "worst pair #" + std::to_string(worst_index) + " of " +
                                 std::to_string(wspd.size())
                           : "no pairs");
    return report;
}

VerificationReport check_separation(const BallWspd& wspd) {
    return check_separation(wspd, verification_tolerance());
}

double all_pairs_dilation_oracle(std::span<const Point> points, std::span<const Edge> edges) {
    const std::size_t n = points.size();
    if (n > 600) {
        throw std::invalid_argument(
            "all_pairs_dilation_oracle: n > 600; use the per-source dilation for large graphs");
    }
    if (n < 2) return 1.0;

    std::vector<double> dist(n * n, kInf);
    for (std::size_t v = 0; v < n; ++v) dist[v * n + v] = 0.0;
    for (const Edge& e : edges) {
        if (e.first >= n || e.second >= n) throw std::invalid_argument("all_pairs_dilation_oracle: bad edge");
        const double w = distance(points[e.first], points[e.second]);
        dist[e.first * n + e.second] = std::min(dist[e.first * n + e.second], w);
        dist[e.second * n + e.first] = std::min(dist[e.second * n + e.first], w);
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            const double dik = dist[i * n + k];
            if (dik == kInf) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const double cand = dik + dist[k * n + j];
                if (cand < dist[i * n + j]) dist[i * n + j] = cand;
            }
        }
    }

    double worst = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const double euclid = distance(points[u], points[v]);
            if (euclid == 0.0) continue;  // coincident pair, skipped
            worst = std::max(worst, dist[u * n + v] / euclid);
        }
    }
    return worst == 0.0 ? 1.0 : worst;
}

namespace {

struct Witness {
    Point center;
    double radius = 0.0;  // witness radius before tripling
};

Witness center_box_witness(std::span<const std::uint32_t> ids, std::span<const Ball> balls) {
    std::vector<Point> centers;
    centers.reserve(ids.size());
    for (std::uint32_t id : ids) centers.push_back(balls[id].center);
    const AxisBox box = bounding_box(centers);
    return Witness{box.center(), 0.5 * std::sqrt(static_cast<double>(box.dim())) * box.max_length()};
}

// Worst containment slack of the listed instance points in the ball
// (center, radius): min over points of radius - |p - center|.
double containment_slack(std::span<const std::uint32_t> ids, const PreciseInstance& inst,
                         const Point& center, double radius) {
    double slack = kInf;
    for (std::uint32_t id : ids) {
        slack = std::min(slack, radius - distance(inst.points[id], center));
    }
    return slack;
}

}  // namespace

VerificationReport check_instance_separation(const BallWspd& wspd,
                                             std::span<const PreciseInstance> instances,
                                             double tolerance) {
    const auto balls = wspd.balls();
    for (const PreciseInstance& inst : instances) {
        if (inst.points.size() != balls.size()) {
            throw std::invalid_argument("check_instance_separation: instance size mismatch");
        }
    }

    const double s = wspd.separation();
    double worst = kInf;
    std::string worst_detail = "no clustered pairs";
    for (std::size_t pi = 0; pi < wspd.size(); ++pi) {
        const BallPair pair = wspd.materialize(pi);
        if (pair.a.size() == 1 && pair.b.size() == 1) continue;  // nothing to test

        const bool mixed = pair.a.size() == 1 || pair.b.size() == 1;
        const auto& lone = pair.a.size() == 1 ? pair.a : pair.b;
        const auto& bulk = pair.a.size() == 1 ? pair.b : pair.a;

        for (std::size_t ii = 0; ii < instances.size(); ++ii) {
            const PreciseInstance& inst = instances[ii];
            double margin;
            if (mixed) {
                const Witness wb = center_box_witness(bulk, balls);
                const double rho = wb.radius;
                const Point& pk = inst.points[lone.front()];
                const double to_center = distance(pk, wb.center);
                if (to_center < 1e-300) {
                    margin = -kInf;  // degenerate geometry; cannot place the offset ball
                } else {
                    // Offset ball of radius 3*rho tangent to pk, on the far
                    // side from the cluster witness.
                    const double sep = (to_center + 3.0 * rho) - 6.0 * rho - 3.0 * s * rho;
                    margin = std::min(sep, containment_slack(bulk, inst, wb.center, 3.0 * rho));
                }
            } else {
                const Witness wa = center_box_witness(pair.a, balls);
                const Witness wb = center_box_witness(pair.b, balls);
                const double rho = std::max(wa.radius, wb.radius);
                const double sep = distance(wa.center, wb.center) - 6.0 * rho - 3.0 * s * rho;
                margin = std::min({sep, containment_slack(pair.a, inst, wa.center, 3.0 * rho),
                                   containment_slack(pair.b, inst, wb.center, 3.0 * rho)});
            }
            if (margin < worst) {
                worst = margin;
                worst_detail = "pair #" + std::to_string(pi) + ", instance #" + std::to_string(ii);
            }
        }
    }

    VerificationReport report;
    report.add("instance-separation", worst >= -tolerance, worst, worst_detail);
    return report;
}

VerificationReport check_instance_separation(const BallWspd& wspd,
                                             std::span<const PreciseInstance> instances) {
    return check_instance_separation(wspd, instances, verification_tolerance());
}

}  // namespace impspan
