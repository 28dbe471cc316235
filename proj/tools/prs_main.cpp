#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "prs/bench.hpp"
#include "prs/cluster_popping.hpp"
#include "prs/cycle_popping.hpp"
#include "prs/graph_io.hpp"
#include "prs/reliability.hpp"
#include "prs/sink_popping.hpp"
#include "prs/verify.hpp"

using namespace prs;
using nlohmann::json;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitRoundCap = 3;

enum class Format { text, csv, structured };

const std::map<std::string, Format> kFormats{
    {"text", Format::text}, {"csv", Format::csv}, {"structured", Format::structured}};

struct SampleArgs {
    std::string mode;
    std::string file;
    std::uint64_t seed = 1;
    std::uint64_t samples = 1;
    std::string algorithm = "tarjan";
    std::optional<Vertex> root;
    Format format = Format::text;
    bool assert_extremal = false;
    bool emit_samples = false;
    std::uint64_t max_draws = kDefaultMaxDraws;
};

std::string arcs_string(const DirectedGraph& d, const ArcSubset& s) {
    std::ostringstream out;
    bool first = true;
    for (ArcId a = 0; a < d.m(); ++a) {
        if (!s[a]) continue;
        out << (first ? "" : " ") << d.tail(a) << "->" << d.head(a);
        first = false;
    }
    return out.str();
}

std::string arrows_string(const UndirectedGraph& g, const ArrowAssignment& t) {
    std::ostringstream out;
    bool first = true;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (v == t.root) continue;
        out << (first ? "" : " ") << v << "->" << t.target(g, v);
        first = false;
    }
    return out.str();
}

std::string orientation_string(const UndirectedGraph& g, const Orientation& o) {
    std::ostringstream out;
    for (EdgeId e = 0; e < g.m(); ++e) {
        const Vertex t = edge_tail(g, o, e);
        out << (e ? " " : "") << t << "->" << g.other(e, t);
    }
    return out.str();
}

int cmd_sample(const SampleArgs& a) {
    const GraphFile file = load_graph(a.file);
    const auto& g = file.graph;
    const Vertex root = a.root.value_or(file.root.value_or(0));

    // Sample j reads the table seeded with (seed xor j).
    std::vector<std::string> outcomes;
    std::vector<RunStats> per_sample;
    RunStats total;
    if (a.mode == "root-connected") {
        if (a.algorithm != "naive" && a.algorithm != "tarjan")
            throw InvalidInput("--algorithm must be naive or tarjan");
        g.require_probabilities();
        const auto d = bidirect(g);
        ClusterOptions options{a.assert_extremal, a.assert_extremal, a.max_draws};
        for (std::uint64_t j = 0; j < a.samples; ++j) {
            ResamplingTable table(a.seed ^ j, d.m());
            const auto s = a.algorithm == "naive" ? sample_root_connected_naive(d, root, table, options)
                                                  : sample_root_connected_tarjan(d, root, table, options);
            outcomes.push_back(arcs_string(d, s.value));
            per_sample.push_back(s.stats);
        }
    } else if (a.mode == "spanning-tree") {
        const PrsOptions options{a.assert_extremal, a.max_draws};
        for (std::uint64_t j = 0; j < a.samples; ++j) {
            ResamplingTable table(a.seed ^ j, g.n());
            const auto s = sample_spanning_tree(g, root, table, options);
            outcomes.push_back(arrows_string(g, s.value));
            per_sample.push_back(s.stats);
        }
    } else {
        const PrsOptions options{a.assert_extremal, a.max_draws};
        for (std::uint64_t j = 0; j < a.samples; ++j) {
            ResamplingTable table(a.seed ^ j, g.m());
            const auto s = sample_sink_free(g, table, options);
            outcomes.push_back(orientation_string(g, s.value));
            per_sample.push_back(s.stats);
        }
    }
    for (const auto& s : per_sample) total += s;

    MeanAccumulator init, resampled, rounds;
    for (const auto& s : per_sample) {
        init.add(static_cast<double>(s.init_draws));
        resampled.add(static_cast<double>(s.resampled_vars));
        rounds.add(static_cast<double>(s.rounds));
    }

    switch (a.format) {
        case Format::structured: {
            json report{{"mode", a.mode},
                        {"file", a.file},
                        {"seed", a.seed},
                        {"samples", a.samples},
                        {"root", root},
                        {"n", g.n()},
                        {"m", g.m()},
                        {"stats", to_json(total)},
                        {"mean", {{"init_draws", init.mean()},
                                  {"resampled_vars", resampled.mean()},
                                  {"resampled_vars_stderr", resampled.stderr_of_mean()},
                                  {"rounds", rounds.mean()}}}};
            if (a.mode == "root-connected") report["algorithm"] = a.algorithm;
            if (a.emit_samples) {
                json rows = json::array();
                for (std::size_t j = 0; j < outcomes.size(); ++j)
                    rows.push_back({{"outcome", outcomes[j]}, {"stats", to_json(per_sample[j])}});
                report["per_sample"] = rows;
            }
            std::cout << report.dump(2) << '\n';
            break;
        }
        case Format::csv:
            std::cout << "sample,seed,init_draws,resampled_vars,rounds,outcome\n";
            for (std::size_t j = 0; j < outcomes.size(); ++j)
                std::cout << j << ',' << (a.seed ^ j) << ',' << per_sample[j].init_draws << ','
                          << per_sample[j].resampled_vars << ',' << per_sample[j].rounds << ",\""
                          << outcomes[j] << "\"\n";
            break;
        case Format::text:
            std::cout << a.mode << " " << a.file << " (n=" << g.n() << ", m=" << g.m() << ", root=" << root
                      << ")\n";
            std::cout << "seed " << a.seed << ", " << a.samples << " samples";
            if (a.mode == "root-connected") std::cout << ", algorithm " << a.algorithm;
            std::cout << '\n';
            if (a.emit_samples)
                for (std::size_t j = 0; j < outcomes.size(); ++j)
                    std::cout << "  [" << j << "] " << outcomes[j] << '\n';
            std::cout << "init_draws      total " << total.init_draws << "  mean " << init.mean() << '\n'
                      << "resampled_vars  total " << total.resampled_vars << "  mean " << resampled.mean()
                      << " +- " << resampled.stderr_of_mean() << '\n'
                      << "rounds          total " << total.rounds << "  mean " << rounds.mean() << '\n';
            std::uint64_t max_depth = 0;
            for (auto c : total.per_variable_resamples) max_depth = std::max(max_depth, c);
            std::cout << "max per-variable resamples (summed) " << max_depth << '\n';
            break;
    }
    return 0;
}

struct BenchArgs {
    std::string family;
    std::vector<std::size_t> n, n2;
    std::uint64_t reps = 1000;
    std::uint64_t seed = 1;
    double p = 0.5;
    double weight_ratio = 2.0;
    std::string kind = "cluster";
    std::size_t instances = 3;
    Format format = Format::csv;
};

int cmd_bench(const BenchArgs& a) {
    BenchOptions o;
    o.family = parse_bench_family(a.family);
    const bool lollipop = o.family == BenchFamily::lollipop_cluster || o.family == BenchFamily::lollipop_cycle;
    o.sizes = lollipop ? (a.n2.empty() ? a.n : a.n2) : a.n;
    if (a.reps == 0) throw InvalidInput("--reps must be positive");
    o.reps = a.reps;
    o.seed = a.seed;
    o.p = a.p;
    o.weight_ratio = a.weight_ratio;
    o.kind = a.kind;
    o.instances_per_size = a.instances;
    if (!(a.p > 0.0 && a.p < 1.0)) throw InvalidInput("--p must lie in (0, 1)");
    if (!(a.weight_ratio >= 1.0)) throw InvalidInput("--weight-ratio must be at least 1");

    const auto rows = run_bench(o);
    switch (a.format) {
        case Format::csv:
            std::cout << bench_csv_header() << '\n';
            for (const auto& r : rows) std::cout << bench_csv_row(r) << '\n';
            break;
        case Format::structured: {
            json out = json::array();
            for (const auto& r : rows)
                out.push_back({{"family", r.family},
                               {"instance", r.instance},
                               {"n", r.n},
                               {"m", r.m},
                               {"params", r.params},
                               {"reps", r.reps},
                               {"seed", r.seed},
                               {"init_draws", {r.init_draws.mean, r.init_draws.stderr_}},
                               {"resampled_vars", {r.resampled_vars.mean, r.resampled_vars.stderr_}},
                               {"rounds", {r.rounds.mean, r.rounds.stderr_}},
                               {"total_draws", {r.total_draws.mean, r.total_draws.stderr_}},
                               {"bound", r.bound},
                               {"ratio", r.ratio},
                               {"within_bound", r.within_bound}});
            std::cout << out.dump(2) << '\n';
            break;
        }
        case Format::text:
            std::cout << "seed " << a.seed << ", " << a.reps << " replicates\n";
            for (const auto& r : rows)
                std::cout << std::left << std::setw(28) << r.family << std::setw(22) << r.instance
                          << " total " << r.total_draws.mean << " +- " << r.total_draws.stderr_ << "  bound "
                          << r.bound << "  ratio " << r.ratio << (r.within_bound ? "" : "  OVER BOUND")
                          << '\n';
            break;
    }
    return 0;
}

struct EstimateArgs {
    std::string file;
    double epsilon = 0.1;
    std::uint64_t seed = 1;
    std::optional<double> confidence;
    std::optional<Vertex> root;
    Format format = Format::text;
};

int cmd_estimate(const EstimateArgs& a) {
    const GraphFile file = load_graph(a.file);
    ReliabilityOptions o;
    o.epsilon = a.epsilon;
    o.seed = a.seed;
    o.confidence = a.confidence;
    o.root = a.root.value_or(file.root.value_or(0));
    const auto est = estimate_reliability(file.graph, o);

    if (a.format == Format::structured) {
        json stages = json::array();
        for (const auto& s : est.stages)
            stages.push_back({{"beta", s.beta}, {"ratio", s.ratio}, {"samples", s.samples}, {"terminal", s.terminal}});
        json report{{"file", a.file},
                    {"value", est.value},
                    {"epsilon", est.epsilon},
                    {"seed", est.seed},
                    {"root", o.root},
                    {"step", est.schedule.step},
                    {"target_beta", est.schedule.target_beta},
                    {"samples_per_stage", est.schedule.samples_per_stage},
                    {"repetitions", est.repetitions},
                    {"stages", stages}};
        if (a.confidence) report["confidence"] = *a.confidence;
        std::cout << report.dump(2) << '\n';
        return 0;
    }
    if (a.format == Format::csv) {
        std::cout << "stage,beta,ratio,samples,terminal\n";
        for (std::size_t i = 0; i < est.stages.size(); ++i)
            std::cout << i << ',' << est.stages[i].beta << ',' << est.stages[i].ratio << ','
                      << est.stages[i].samples << ',' << (est.stages[i].terminal ? 1 : 0) << '\n';
        return 0;
    }
    std::cout << std::setprecision(10);
    std::cout << "reliability " << est.value << "\n"
              << "epsilon " << est.epsilon << ", seed " << est.seed << ", root " << o.root << '\n';
    if (!est.stages.empty()) {
        std::cout << "stages " << est.stages.size() << " (step " << est.schedule.step << ", beta_K "
                  << est.schedule.target_beta << "), " << est.schedule.samples_per_stage
                  << " samples per stage\n";
        if (est.repetitions.size() > 1) {
            std::cout << "median of " << est.repetitions.size() << " repetitions:";
            for (double v : est.repetitions) std::cout << ' ' << v;
            std::cout << '\n';
        }
    }
    return 0;
}

struct VerifyArgs {
    std::string suite;
    VerifyConfig config;
    bool quiet = false;
    Format format = Format::text;
};

int cmd_verify(const VerifyArgs& a) {
    const auto report = run_suite(a.suite, a.config);
    if (a.format == Format::structured) {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"instance", c.instance}, {"passed", c.passed}, {"detail", c.detail}});
        std::cout << json{{"suite", report.name},
                          {"seed", a.config.seed},
                          {"samples", a.config.samples},
                          {"checks", checks},
                          {"failures", report.failures()}}
                         .dump(2)
                  << '\n';
    } else if (a.format == Format::csv) {
        std::cout << "suite,instance,passed,detail\n";
        for (const auto& c : report.checks)
            std::cout << report.name << ",\"" << c.instance << "\"," << (c.passed ? 1 : 0) << ",\"" << c.detail
                      << "\"\n";
    } else {
        for (const auto& c : report.checks)
            if (!a.quiet || !c.passed)
                std::cout << (c.passed ? "PASS " : "FAIL ") << c.instance << "  " << c.detail << '\n';
        std::cout << report.name << ": " << report.checks.size() - report.failures() << "/"
                  << report.checks.size() << " passed (seed " << a.config.seed << ")\n";
    }
    return report.passed() ? 0 : 1;
}

void add_format(CLI::App* app, Format& format) {
    app->add_option("--format", format, "Output format: text, csv or structured")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact samplers by partial rejection sampling, network reliability estimation and benchmarks"};
    app.require_subcommand(1);

    SampleArgs sample;
    auto* sample_cmd = app.add_subcommand("sample", "Draw exact samples from a graph file");
    sample_cmd->add_option("mode", sample.mode, "root-connected, spanning-tree or sink-free")
        ->required()
        ->check(CLI::IsMember({"root-connected", "spanning-tree", "sink-free"}));
    sample_cmd->add_option("file", sample.file, "Graph file (edge list or structured)")->required();
    sample_cmd->add_option("--seed", sample.seed, "Master seed; sample j uses seed xor j");
    sample_cmd->add_option("--samples", sample.samples, "Number of samples");
    sample_cmd->add_option("--algorithm", sample.algorithm, "Cluster-popping variant: naive or tarjan");
    sample_cmd->add_option("--root", sample.root, "Root vertex (default: file root, else 0)");
    sample_cmd->add_option("--max-draws", sample.max_draws, "Draw budget per sample; exceeding it exits 3");
    sample_cmd->add_flag("--assert-extremal", sample.assert_extremal,
                         "Check disjointness of simultaneously popped events and verify each pop");
    sample_cmd->add_flag("--emit-samples", sample.emit_samples, "Print every sample, not just the stats");
    add_format(sample_cmd, sample.format);

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Reproduce run-time bounds on benchmark families");
    bench_cmd->add_option("family", bench.family,
                          "lollipop-cluster, lollipop-cycle, cycle-sink or random-bound-sweep")
        ->required();
    bench_cmd->add_option("--n", bench.n, "Sizes (n, or n2 for lollipops)")->delimiter(',');
    bench_cmd->add_option("--n2", bench.n2, "Lollipop clique sizes; path length is ceil(n2^1.5)")->delimiter(',');
    bench_cmd->add_option("--reps", bench.reps, "Replicates per instance; replicate r uses seed xor r");
    bench_cmd->add_option("--seed", bench.seed, "Master seed");
    bench_cmd->add_option("--p", bench.p, "Failure probability for lollipop-cluster");
    bench_cmd->add_option("--weight-ratio", bench.weight_ratio, "Clique/path weight ratio for lollipop-cycle");
    bench_cmd->add_option("--kind", bench.kind, "Sampler for random-bound-sweep: cluster, cycle or sink");
    bench_cmd->add_option("--instances", bench.instances, "Random instances per size for the sweep");
    add_format(bench_cmd, bench.format);
    bench_cmd->footer(bench_csv_schema());

    EstimateArgs estimate;
    auto* estimate_cmd =
        app.add_subcommand("estimate-reliability", "Estimate all-terminal reliability of a graph file");
    estimate_cmd->add_option("file", estimate.file, "Graph file with failure probabilities")->required();
    estimate_cmd->add_option("--epsilon", estimate.epsilon, "Relative accuracy");
    estimate_cmd->add_option("--seed", estimate.seed, "Master seed");
    estimate_cmd->add_option("--confidence", estimate.confidence, "Success probability; takes a median of runs");
    estimate_cmd->add_option("--root", estimate.root, "Root of the bi-directed graph");
    add_format(estimate_cmd, estimate.format);

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run an oracle verification suite");
    verify_cmd->add_option("--suite", verify.suite, "distributions, expectations, identity or bounds")
        ->required()
        ->check(CLI::IsMember({"distributions", "expectations", "identity", "bounds"}));
    verify_cmd->add_option("--samples", verify.config.samples, "Samples per grid instance");
    verify_cmd->add_option("--seed", verify.config.seed, "Master seed");
    verify_cmd->add_option("--max-n", verify.config.max_vertices, "Largest graph in the grid (2..5)")
        ->check(CLI::Range(2, 5));
    verify_cmd->add_flag("--naive", verify.config.cluster_naive, "Use round-based cluster-popping");
    verify_cmd->add_flag("--quiet", verify.quiet, "Print only failing checks");
    add_format(verify_cmd, verify.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (*sample_cmd) return cmd_sample(sample);
        if (*bench_cmd) return cmd_bench(bench);
        if (*estimate_cmd) return cmd_estimate(estimate);
        return cmd_verify(verify);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const RoundCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRoundCap;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
