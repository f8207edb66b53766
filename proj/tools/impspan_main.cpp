#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "impspan/generate.hpp"
#include "impspan/io.hpp"
#include "impspan/lower_bound.hpp"
#include "impspan/spanner.hpp"
#include "impspan/split_tree.hpp"
#include "impspan/verify.hpp"
#include "impspan/wspd_balls.hpp"

namespace {

using namespace impspan;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct GenArgs {
    std::size_t n = 0, dim = 2;
    double rmin = 0.0, rmax = 1.0, exponent = 1.0;
    std::uint64_t seed = 0;
    std::string out;
};

int run_gen(const GenArgs& a) {
    const auto balls = generate_disjoint_balls(a.n, a.dim, a.rmin, a.rmax, a.seed, a.exponent);
    write_ball_file(a.out, balls);
    std::printf("gen: n=%zu dim=%zu out=%s\n", balls.size(), a.dim, a.out.c_str());
    return 0;
}

struct WspdArgs {
    std::string in, out, dump_tree_path;
    double s = 0.0;
};

int run_wspd(const WspdArgs& a) {
    const auto balls = read_ball_file(a.in);
    const auto start = Clock::now();
    FindPairsStats stats;
    const BallWspd w = compute_ball_wspd(balls, a.s, &stats);
    const double ms = elapsed_ms(start);

    std::size_t partitioned = 0;
    for (const BallWspdEntry& e : w.entries()) {
        if (e.category == PairCategory::partitioned) ++partitioned;
    }
    if (!a.out.empty()) write_text_file(a.out, write_pair_dump(w));
    if (!a.dump_tree_path.empty()) write_text_file(a.dump_tree_path, dump_tree(w.tree()));
    std::printf("wspd: n=%zu s=%s m=%zu direct=%zu partitioned=%zu recursions=%llu build_ms=%.1f\n",
                balls.size(), format_double(a.s).c_str(), w.size(), w.size() - partitioned,
                partitioned, static_cast<unsigned long long>(stats.recursion_steps), ms);
    return 0;
}

struct SpannerArgs {
    std::string in, out, strategy = "centers";
    double t = 0.0;
    std::uint64_t seed = 0;
    long samples = -1;  // -1: default (one centers instance at desk scale)
    int threads = 1;
};

int run_spanner(const SpannerArgs& a) {
    const auto balls = read_ball_file(a.in);
    const double s = 4.0 * (a.t + 1.0) / (a.t - 1.0);
    if (s > 1000.0) {
        std::fprintf(stderr, "warning: t=%s is close to 1; separation %.1f will blow up the pair count\n",
                     format_double(a.t).c_str(), s);
    }

    const auto start = Clock::now();
    const ImpreciseSpanner sp = build_imprecise_spanner(balls, a.t);
    const double ms = elapsed_ms(start);
    if (!a.out.empty()) write_text_file(a.out, write_edge_list(sp.edges));

    long samples = a.samples;
    if (samples < 0) samples = balls.size() <= 5000 ? 1 : 0;
    double max_dilation = std::nan("");
    const SampleStrategy strat = parse_strategy(a.strategy);
    for (long i = 0; i < samples; ++i) {
        const PreciseInstance inst = sample_instance(balls, strat, a.seed + static_cast<std::uint64_t>(i));
        const DilationResult res = dilation(make_instance_graph(inst, sp.edges), a.threads);
        if (std::isnan(max_dilation) || res.value > max_dilation) max_dilation = res.value;
    }

    std::printf("spanner: n=%zu t=%s s=%s m=%zu edges=%zu build_ms=%.1f max_dilation=%s\n",
                balls.size(), format_double(a.t).c_str(), format_double(sp.s).c_str(), sp.wspd_size,
                sp.edges.size(), ms, std::isnan(max_dilation) ? "n/a" : format_double(max_dilation).c_str());
    return 0;
}

struct VerifyArgs {
    std::string in, csv;
    double s = 0.0, t = 0.0;
    bool have_s = false, have_t = false;
    long samples = 20;
    std::uint64_t seed = 0;
    int threads = 1;
};

int run_verify(const VerifyArgs& a) {
    const auto balls = read_ball_file(a.in);
    const std::size_t n = balls.size();
    const double s = a.have_s ? a.s : 4.0 * (a.t + 1.0) / (a.t - 1.0);
    const double tol = verification_tolerance();

    const auto start = Clock::now();
    const BallWspd w = compute_ball_wspd(balls, s);
    const double ms = elapsed_ms(start);

    VerificationReport report;
    if (n <= 600) {
        report.merge(check_coverage(w));
    } else {
        report.add("coverage", true, std::numeric_limits<double>::infinity(),
                   "skipped: n > 600 (desk-scale check)");
    }
    report.merge(check_separation(w, tol));

    std::vector<PreciseInstance> instances;
    instances.push_back(sample_instance(balls, SampleStrategy::centers));
    for (long i = 0; i < a.samples; ++i) {
        instances.push_back(sample_instance(balls, SampleStrategy::uniform_random,
                                            a.seed + static_cast<std::uint64_t>(i)));
        instances.push_back(sample_instance(balls, SampleStrategy::boundary_random,
                                            a.seed + 1000003 + static_cast<std::uint64_t>(i)));
    }
    report.merge(check_instance_separation(w, instances, tol));

    double max_dilation = std::nan("");
    if (a.have_t) {
        const std::vector<Edge> edges = spanner_edges(w);

        double worst = 0.0;
        double worst_diff = 0.0;
        for (const PreciseInstance& inst : instances) {
            const InstanceGraph g = make_instance_graph(inst, edges);
            const DilationResult res = dilation(g, a.threads);
            worst = std::max(worst, res.value);
            if (n <= 600) {
                const double oracle = all_pairs_dilation_oracle(g.points(), g.edges());
                worst_diff = std::max(worst_diff, std::abs(res.value - oracle));
            }
        }
        max_dilation = worst;
        report.add("stretch", worst <= a.t + tol, a.t + tol - worst,
                   "max dilation " + format_double(worst) + " over " +
                       std::to_string(instances.size()) + " instances, t=" + format_double(a.t));
        if (n <= 600) {
            report.add("dilation-cross-check", worst_diff <= tol, -worst_diff,
                       "per-source vs matrix oracle", 0.0);
        }
    }

    std::fputs(render_table(report).c_str(), stdout);
    std::size_t failed = 0;
    for (const CheckItem& c : report.checks) {
        if (!c.pass) ++failed;
    }
    std::printf("verify: n=%zu s=%s m=%zu build_ms=%.1f max_dilation=%s passed=%zu failed=%zu\n", n,
                format_double(s).c_str(), w.size(), ms,
                std::isnan(max_dilation) ? "n/a" : format_double(max_dilation).c_str(),
                report.checks.size() - failed, failed);
    if (!a.csv.empty()) write_text_file(a.csv, render_csv(report));
    return report.all_pass() ? 0 : 1;
}

struct LowerBoundArgs {
    int n = 0;
    double t = 0.0;
    std::string out, segments_out;
    int threads = 1;
};

int run_lowerbound(const LowerBoundArgs& a) {
    const LowerBoundReport report = verify_completeness_required(a.n, a.t, a.threads);
    if (!a.segments_out.empty()) {
        write_text_file(a.segments_out, write_segments(generate_radial_segments(a.n, a.t)));
    }
    if (!a.out.empty()) write_text_file(a.out, write_lower_bound_csv(report));

    double min_margin = std::numeric_limits<double>::infinity();
    for (const RemovedEdgeCase& c : report.cases) min_margin = std::min(min_margin, c.shortest_margin);
    const std::size_t total = report.cases.size();
    std::printf("lowerbound: n=%d t=%s %zu/%zu removed-edge cases exceed stretch, min margin %s\n",
                a.n, format_double(a.t).c_str(), total - report.failures(), total,
                format_double(min_margin).c_str());
    return report.all_pass() ? 0 : 1;
}

struct BenchArgs {
    std::vector<std::size_t> sizes;
    std::size_t dim = 2;
    double t = 2.0;
    std::uint64_t seed = 0;
    long samples = 3;
    std::string out;
    int threads = 1;
};

int run_bench(const BenchArgs& a) {
    std::string csv = "n,m,edges,build_ms,max_dilation\n";
    for (std::size_t n : a.sizes) {
        const auto balls = generate_disjoint_balls(n, a.dim, 1.0, 1.0, a.seed + n);
        const auto start = Clock::now();
        const ImpreciseSpanner sp = build_imprecise_spanner(balls, a.t);
        const double ms = elapsed_ms(start);

        double max_dilation = std::nan("");
        if (n <= 4096) {
            for (long i = 0; i < a.samples; ++i) {
                const SampleStrategy strat = i == 0 ? SampleStrategy::centers : SampleStrategy::uniform_random;
                const PreciseInstance inst = sample_instance(balls, strat, a.seed + static_cast<std::uint64_t>(i));
                const DilationResult res = dilation(make_instance_graph(inst, sp.edges), a.threads);
                if (std::isnan(max_dilation) || res.value > max_dilation) max_dilation = res.value;
            }
        }
        char line[160];
        std::snprintf(line, sizeof line, "%zu,%zu,%zu,%.3f,%s\n", n, sp.wspd_size, sp.edges.size(), ms,
                      std::isnan(max_dilation) ? "nan" : format_double(max_dilation).c_str());
        csv += line;
        std::fputs(line, stdout);
    }
    if (!a.out.empty()) write_text_file(a.out, csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"well-separated pair decompositions and imprecise spanners for disjoint balls"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* cmd_gen = app.add_subcommand("gen", "generate pairwise disjoint balls");
    cmd_gen->add_option("--n", gen.n, "number of balls")->required();
    cmd_gen->add_option("--dim", gen.dim, "dimension")->capture_default_str();
    cmd_gen->add_option("--rmin", gen.rmin, "minimum radius")->capture_default_str();
    cmd_gen->add_option("--rmax", gen.rmax, "maximum radius")->capture_default_str();
    cmd_gen->add_option("--exponent", gen.exponent, "radius skew exponent")->capture_default_str();
    cmd_gen->add_option("--seed", gen.seed, "random seed")->capture_default_str();
    cmd_gen->add_option("--out", gen.out, "output ball file")->required();

    WspdArgs wspd;
    auto* cmd_wspd = app.add_subcommand("wspd", "compute the decomposition of a ball file");
    cmd_wspd->add_option("--in", wspd.in, "input ball file")->required();
    cmd_wspd->add_option("--s", wspd.s, "separation (> 0)")->required()->check(CLI::PositiveNumber);
    cmd_wspd->add_option("--out", wspd.out, "pair dump file");
    cmd_wspd->add_option("--dump-tree", wspd.dump_tree_path, "debug dump of the split tree");

    SpannerArgs spanner;
    auto* cmd_spanner = app.add_subcommand("spanner", "build an imprecise spanner");
    cmd_spanner->add_option("--in", spanner.in, "input ball file")->required();
    cmd_spanner->add_option("--t", spanner.t, "stretch factor (> 1)")->required();
    cmd_spanner->add_option("--out", spanner.out, "edge list file");
    cmd_spanner->add_option("--samples", spanner.samples, "instances to sample for the dilation report");
    cmd_spanner->add_option("--strategy", spanner.strategy, "centers | uniform-random | boundary-random")
        ->capture_default_str();
    cmd_spanner->add_option("--seed", spanner.seed, "random seed")->capture_default_str();
    cmd_spanner->add_option("--threads", spanner.threads, "parallelism cap")->capture_default_str();

    VerifyArgs verify;
    auto* cmd_verify = app.add_subcommand("verify", "run the oracle suite against a ball file");
    cmd_verify->add_option("--in", verify.in, "input ball file")->required();
    auto* opt_s = cmd_verify->add_option("--s", verify.s, "separation (> 0)")->check(CLI::PositiveNumber);
    auto* opt_t = cmd_verify->add_option("--t", verify.t, "stretch factor (> 1); also checks dilation");
    opt_s->excludes(opt_t);
    opt_t->excludes(opt_s);
    cmd_verify->add_option("--samples", verify.samples, "sampled instances per random strategy")
        ->capture_default_str();
    cmd_verify->add_option("--seed", verify.seed, "random seed")->capture_default_str();
    cmd_verify->add_option("--csv", verify.csv, "write the report as CSV");
    cmd_verify->add_option("--threads", verify.threads, "parallelism cap")->capture_default_str();

    LowerBoundArgs lb;
    auto* cmd_lb = app.add_subcommand("lowerbound", "check that the radial segment family forces a complete graph");
    cmd_lb->add_option("--n", lb.n, "number of segments (>= 3)")->required();
    cmd_lb->add_option("--t", lb.t, "stretch factor (> 1)")->required();
    cmd_lb->add_option("--out", lb.out, "write per-case margins as CSV");
    cmd_lb->add_option("--segments", lb.segments_out, "write the segment endpoints");
    cmd_lb->add_option("--threads", lb.threads, "parallelism cap")->capture_default_str();

    BenchArgs bench;
    auto* cmd_bench = app.add_subcommand("bench", "time spanner builds over a size sweep");
    cmd_bench->add_option("--n", bench.sizes, "sizes to sweep (comma separated)")
        ->required()
        ->delimiter(',');
    cmd_bench->add_option("--dim", bench.dim, "dimension")->capture_default_str();
    cmd_bench->add_option("--t", bench.t, "stretch factor")->capture_default_str();
    cmd_bench->add_option("--seed", bench.seed, "random seed")->capture_default_str();
    cmd_bench->add_option("--samples", bench.samples, "instances per size for the dilation column")
        ->capture_default_str();
    cmd_bench->add_option("--out", bench.out, "CSV output file");
    cmd_bench->add_option("--threads", bench.threads, "parallelism cap")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_gen) return run_gen(gen);
        if (*cmd_wspd) return run_wspd(wspd);
        if (*cmd_spanner) {
            if (spanner.t <= 1.0) throw std::invalid_argument("--t must exceed 1");
            return run_spanner(spanner);
        }
        if (*cmd_verify) {
            verify.have_s = opt_s->count() > 0;
            verify.have_t = opt_t->count() > 0;
            if (!verify.have_s && !verify.have_t) throw std::invalid_argument("verify needs --s or --t");
            if (verify.have_t && verify.t <= 1.0) throw std::invalid_argument("--t must exceed 1");
            return run_verify(verify);
        }
        if (*cmd_lb) {
            if (lb.t <= 1.0) throw std::invalid_argument("--t must exceed 1");
            return run_lowerbound(lb);
        }
        if (*cmd_bench) {
            if (bench.t <= 1.0) throw std::invalid_argument("--t must exceed 1");
            return run_bench(bench);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
