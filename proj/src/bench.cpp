#include "prs/bench.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "prs/cluster_popping.hpp"
#include "prs/cycle_popping.hpp"
#include "prs/generators.hpp"
#include "prs/sink_popping.hpp"

namespace prs {

namespace {

struct Replicates {
    MeanAccumulator init, resampled, rounds, total;
    std::vector<MeanAccumulator> per_variable;

    void add(const RunStats& s) {
        init.add(static_cast<double>(s.init_draws));
        resampled.add(static_cast<double>(s.resampled_vars));
        rounds.add(static_cast<double>(s.rounds));
        total.add(static_cast<double>(s.total_draws()));
        if (per_variable.empty()) per_variable.resize(s.per_variable_resamples.size());
        for (std::size_t i = 0; i < per_variable.size(); ++i)
            per_variable[i].add(static_cast<double>(s.per_variable_resamples[i]));
    }

    void fill(BenchRow& row) const {
        row.init_draws = moments_of(init);
        row.resampled_vars = moments_of(resampled);
        row.rounds = moments_of(rounds);
        row.total_draws = moments_of(total);
        row.within_bound = total.mean() <= row.bound + 3.0 * total.stderr_of_mean();
    }
};

std::string format_double(double x) {
    std::ostringstream out;
    out.precision(10);
    out << x;
    return out.str();
}

std::uint64_t replicate_seed(std::uint64_t seed, std::uint64_t rep) { return seed ^ rep; }

}  // namespace

BenchFamily parse_bench_family(const std::string& name) {
    if (name == "lollipop-cluster") return BenchFamily::lollipop_cluster;
    if (name == "lollipop-cycle") return BenchFamily::lollipop_cycle;
    if (name == "cycle-sink") return BenchFamily::cycle_sink;
    if (name == "random-bound-sweep") return BenchFamily::random_bound_sweep;
    throw InvalidInput("unknown bench family: " + name);
}

BenchRow bench_cluster(const UndirectedGraph& g, Vertex root, std::uint64_t reps, std::uint64_t seed) {
    const auto d = bidirect(g);
    BenchRow row;
    row.n = d.n();
    row.m = d.m();
    row.reps = reps;
    row.seed = seed;
    const double p = d.max_fail_prob();
    const double n = static_cast<double>(d.n()), m = static_cast<double>(d.m());
    row.bound = m + p * m * n / (1.0 - p);
    row.variable_bound = p * n / (1.0 - p);
    row.params = "p_max=" + format_double(p);
    Replicates acc;
    for (std::uint64_t r = 0; r < reps; ++r) {
        ResamplingTable table(replicate_seed(seed, r), d.m());
        acc.add(sample_root_connected_tarjan(d, root, table).stats);
    }
    acc.fill(row);
    row.ratio = acc.resampled.mean() / (p * m * n / (1.0 - p));
    for (const auto& a : acc.per_variable) {
        if (a.mean() > row.max_variable_mean) {
            row.max_variable_mean = a.mean();
            row.max_variable_stderr = a.stderr_of_mean();
        }
        row.variables_within_bound &= a.mean() <= row.variable_bound + 3.0 * a.stderr_of_mean();
    }
    return row;
}

BenchRow bench_cycle(const UndirectedGraph& g, Vertex root, std::uint64_t reps, std::uint64_t seed) {
    BenchRow row;
    row.n = g.n();
    row.m = g.m();
    row.reps = reps;
    row.seed = seed;
    const double r_max = g.max_value() / g.min_value();
    const double n = static_cast<double>(g.n()), m = static_cast<double>(g.m());
    row.bound = (n - 1.0) + 2.0 * r_max * m * n;
    row.params = "r_max=" + format_double(r_max);
    Replicates acc;
    for (std::uint64_t r = 0; r < reps; ++r) {
        ResamplingTable table(replicate_seed(seed, r), g.n());
        acc.add(sample_spanning_tree(g, root, table).stats);
    }
    acc.fill(row);
    row.ratio = acc.total.mean() / (2.0 * r_max * m * n);
    return row;
}

BenchRow bench_sink(const UndirectedGraph& g, std::uint64_t reps, std::uint64_t seed) {
    BenchRow row;
    row.n = g.n();
    row.m = g.m();
    row.reps = reps;
    row.seed = seed;
    const double n = static_cast<double>(g.n()), m = static_cast<double>(g.m());
    row.bound = m + n * (n - 1.0);
    Replicates acc;
    for (std::uint64_t r = 0; r < reps; ++r) {
        ResamplingTable table(replicate_seed(seed, r), g.m());
        acc.add(sample_sink_free(g, table).stats);
    }
    acc.fill(row);
    row.ratio = acc.total.mean() / row.bound;
    return row;
}

std::vector<BenchRow> run_bench(const BenchOptions& o) {
    std::vector<BenchRow> rows;
    auto sized = [&](std::vector<std::size_t> fallback) { return o.sizes.empty() ? fallback : o.sizes; };
    switch (o.family) {
        case BenchFamily::lollipop_cluster:
            for (std::size_t n2 : sized({6, 10})) {
                const auto n1 = static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(n2), 1.5)));
                auto row = bench_cluster(lollipop(n1, n2, o.p), lollipop_root(n1, n2), o.reps, o.seed);
                row.family = "lollipop-cluster";
                row.instance = "lollipop(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
                rows.push_back(row);
            }
            break;
        case BenchFamily::lollipop_cycle:
            for (std::size_t n2 : sized({6, 10})) {
                const auto n1 = static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(n2), 1.5)));
                const auto g = lollipop(n1, n2, 1.0, o.weight_ratio);
                auto row = bench_cycle(g, lollipop_root(n1, n2), o.reps, o.seed);
                row.family = "lollipop-cycle";
                row.instance = "lollipop(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
                rows.push_back(row);
            }
            break;
        case BenchFamily::cycle_sink:
            for (std::size_t n : sized({10, 50})) {
                auto row = bench_sink(cycle_graph(n), o.reps, o.seed);
                row.family = "cycle-sink";
                row.instance = "cycle(" + std::to_string(n) + ")";
                rows.push_back(row);
            }
            break;
        case BenchFamily::random_bound_sweep: {
            std::mt19937_64 rng(o.seed);
            for (std::size_t n : sized({4, 6, 8})) {
                for (std::size_t k = 0; k < o.instances_per_size; ++k) {
                    BenchRow row;
                    if (o.kind == "cluster") {
                        const auto g = random_connected_graph(n, 0.3, rng, 0.2, 0.8);
                        row = bench_cluster(g, 0, o.reps, o.seed);
                    } else if (o.kind == "cycle") {
                        const auto g = random_connected_graph(n, 0.3, rng, 1.0, 3.0);
                        row = bench_cycle(g, 0, o.reps, o.seed);
                    } else if (o.kind == "sink") {
                        auto g = random_connected_graph(n, 0.4, rng);
                        while (has_tree_component(g)) g = random_connected_graph(n, 0.4, rng);
                        row = bench_sink(g, o.reps, o.seed);
                    } else {
                        throw InvalidInput("sweep kind must be cluster, cycle or sink");
                    }
                    row.family = "random-bound-sweep/" + o.kind;
                    row.instance = "random(n=" + std::to_string(n) + ",#" + std::to_string(k) + ")";
                    rows.push_back(row);
                }
            }
            break;
        }
    }
    return rows;
}

std::string bench_csv_header() {
    return "family,instance,n,m,params,reps,seed,init_mean,resampled_mean,resampled_stderr,"
           "rounds_mean,rounds_stderr,total_mean,total_stderr,bound,ratio,within_bound,"
           "max_var_mean,max_var_stderr,var_bound,vars_within_bound";
}

std::string bench_csv_row(const BenchRow& r) {
    std::ostringstream out;
    out << r.family << ',' << r.instance << ',' << r.n << ',' << r.m << ',' << r.params << ','
        << r.reps << ',' << r.seed << ',' << format_double(r.init_draws.mean) << ','
        << format_double(r.resampled_vars.mean) << ',' << format_double(r.resampled_vars.stderr_)
        << ',' << format_double(r.rounds.mean) << ',' << format_double(r.rounds.stderr_) << ','
        << format_double(r.total_draws.mean) << ',' << format_double(r.total_draws.stderr_) << ','
        << format_double(r.bound) << ',' << format_double(r.ratio) << ','
        << (r.within_bound ? 1 : 0) << ',' << format_double(r.max_variable_mean) << ','
        << format_double(r.max_variable_stderr) << ',' << format_double(r.variable_bound) << ','
        << (r.variables_within_bound ? 1 : 0);
    return out.str();
}

std::string bench_csv_schema() {
    return R"(CSV columns (one row per instance):
  family            bench family (lollipop-cluster, lollipop-cycle, cycle-sink, random-bound-sweep/<kind>)
  instance          generator call, e.g. lollipop(15,6)
  n, m              vertices; arcs for cluster rows, edges otherwise
  params            p_max or r_max of the instance
  reps, seed        replicate count; replicate r uses table seed (seed xor r)
  init_mean         mean initialization draws
  resampled_mean/_stderr   mean and standard error of draws after initialization
  rounds_mean/_stderr      mean and standard error of resampling rounds (pops for cluster rows)
  total_mean/_stderr       mean and standard error of all draws
  bound             expected-draw bound: m + p m n/(1-p) (cluster), (n-1) + 2 r_max m n (cycle),
                    m + n(n-1) (sink)
  ratio             resampled_mean/(p m n/(1-p)) (cluster), total_mean/(2 r_max m n) (cycle),
                    total_mean/bound (sink)
  within_bound      1 iff total_mean <= bound + 3 total_stderr
  max_var_mean/_stderr     largest per-arc mean resample count (cluster rows)
  var_bound         p n/(1-p) (cluster rows)
  vars_within_bound 1 iff every arc's mean <= var_bound + 3 stderr
)";
}

}  // namespace prs
