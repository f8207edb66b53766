#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "impspan/generate.hpp"
#include "impspan/io.hpp"
#include "impspan/lower_bound.hpp"
#include "impspan/spanner.hpp"
#include "impspan/split_tree.hpp"
#include "impspan/verify.hpp"
#include "impspan/wspd_balls.hpp"

namespace py = pybind11;
using namespace impspan;

namespace {

const char* category_name(PairCategory c) {
    return c == PairCategory::direct ? "direct" : "partitioned";
}

py::list report_to_list(const VerificationReport& report) {
    py::list out;
    for (const CheckItem& c : report.checks) {
        py::dict d;
        d["name"] = c.name;
        d["pass"] = c.pass;
        d["margin"] = c.margin;
        d["detail"] = c.detail;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_impspan, m) {
    m.doc() = "well-separated pair decompositions and imprecise t-spanners for disjoint balls";

    py::class_<Ball>(m, "Ball")
        .def(py::init<Point, double>(), py::arg("center"), py::arg("radius") = 0.0)
        .def_readwrite("center", &Ball::center)
        .def_readwrite("radius", &Ball::radius)
        .def("__repr__", [](const Ball& b) {
            std::string s = "Ball([";
            for (std::size_t i = 0; i < b.center.size(); ++i) {
                if (i) s += ", ";
                s += format_double(b.center[i]);
            }
            return s + "], " + format_double(b.radius) + ")";
        });

    m.def("ball_distance", &ball_distance);
    m.def("bounding_box", [](const std::vector<Point>& pts) {
        const AxisBox box = bounding_box(pts);
        return py::make_tuple(box.low, box.high);
    });
    m.def("enclosing_ball", [](const Point& low, const Point& high) {
        return enclosing_ball(AxisBox{low, high});
    });
    m.def("unit_ball_volume_coeff", &unit_ball_volume_coeff);
    m.def("pairwise_disjoint", [](const std::vector<Ball>& balls) { return pairwise_disjoint(balls); });
    m.def("packing_bound", &packing_bound);

    py::class_<FindPairsStats>(m, "FindPairsStats")
        .def_readonly("recursion_steps", &FindPairsStats::recursion_steps)
        .def_readonly("radius_rule_violations", &FindPairsStats::radius_rule_violations)
        .def_readonly("min_radius_margin", &FindPairsStats::min_radius_margin);

    py::class_<BallWspd>(m, "BallWspd")
        .def_property_readonly("s", &BallWspd::separation)
        .def("__len__", &BallWspd::size)
        .def("pairs", [](const BallWspd& w) {
            py::list out;
            for (const BallPair& p : w.materialize_all()) {
                out.append(py::make_tuple(p.a, p.b, category_name(p.category)));
            }
            return out;
        });

    m.def("compute_ball_wspd", [](const std::vector<Ball>& balls, double s) {
        return compute_ball_wspd(balls, s);
    });
    m.def("compute_ball_wspd_with_stats", [](const std::vector<Ball>& balls, double s) {
        FindPairsStats stats;
        BallWspd w = compute_ball_wspd(balls, s, &stats);
        return py::make_tuple(std::move(w), stats);
    });

    py::class_<ImpreciseSpanner>(m, "ImpreciseSpanner")
        .def_readonly("t", &ImpreciseSpanner::t)
        .def_readonly("s", &ImpreciseSpanner::s)
        .def_readonly("wspd_size", &ImpreciseSpanner::wspd_size)
        .def_readonly("edges", &ImpreciseSpanner::edges);

    m.def("build_imprecise_spanner", [](const std::vector<Ball>& balls, double t) {
        return build_imprecise_spanner(balls, t);
    });

    m.def("sample_instance",
          [](const std::vector<Ball>& balls, const std::string& strategy, std::uint64_t seed) {
              return sample_instance(balls, parse_strategy(strategy), seed).points;
          },
          py::arg("balls"), py::arg("strategy") = "centers", py::arg("seed") = 0);

    m.def("dilation", [](const std::vector<Point>& points, const std::vector<Edge>& edges) {
        const DilationResult r = dilation(InstanceGraph(points, edges));
        py::dict d;
        d["value"] = r.value;
        d["connected"] = r.connected;
        d["skipped_pairs"] = r.skipped_pairs;
        d["worst_pair"] = py::make_tuple(r.worst_u, r.worst_v);
        return d;
    });
    m.def("all_pairs_dilation_oracle",
          [](const std::vector<Point>& points, const std::vector<Edge>& edges) {
              return all_pairs_dilation_oracle(points, edges);
          });

    m.def("check_coverage", [](const BallWspd& w) { return report_to_list(check_coverage(w)); });
    m.def("check_separation", [](const BallWspd& w) { return report_to_list(check_separation(w)); });
    m.def("check_instance_separation", [](const BallWspd& w, const std::vector<std::vector<Point>>& instances) {
        std::vector<PreciseInstance> insts;
        insts.reserve(instances.size());
        for (const auto& pts : instances) insts.push_back(PreciseInstance{pts});
        return report_to_list(check_instance_separation(w, insts));
    });

    m.def("generate_radial_segments", [](int n, double t) {
        py::list out;
        for (const Segment& s : generate_radial_segments(n, t)) {
            out.append(py::make_tuple(s.p, s.q));
        }
        return out;
    });
    m.def("verify_completeness_required", [](int n, double t) {
        const LowerBoundReport r = verify_completeness_required(n, t);
        py::dict d;
        d["all_pass"] = r.all_pass();
        d["cases"] = [&] {
            py::list cases;
            for (const RemovedEdgeCase& c : r.cases) {
                cases.append(py::make_tuple(c.i, c.j, c.shortest_margin));
            }
            return cases;
        }();
        return d;
    });

    m.def("generate_disjoint_balls",
          [](std::size_t n, std::size_t d, double rmin, double rmax, std::uint64_t seed, double exponent) {
              return generate_disjoint_balls(n, d, rmin, rmax, seed, exponent);
          },
          py::arg("n"), py::arg("d") = 2, py::arg("rmin") = 0.0, py::arg("rmax") = 1.0,
          py::arg("seed") = 0, py::arg("exponent") = 1.0);
    m.def("generate_clustered_balls", &generate_clustered_balls,
          py::arg("n"), py::arg("d") = 2, py::arg("seed") = 0);

    m.def("write_ball_file", [](const std::vector<Ball>& balls) { return write_ball_file(balls); });
    m.def("parse_ball_file", &parse_ball_file);
}
