#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prs/graph.hpp"
#include "prs/statistics.hpp"

namespace prs {

/// Mean and standard error of one run statistic across replicates.
struct Moments {
    double mean = 0.0;
    double stderr_ = 0.0;
};

inline Moments moments_of(const MeanAccumulator& acc) { return {acc.mean(), acc.stderr_of_mean()}; }

struct BenchRow {
    std::string family;
    std::string instance;  // e.g. "lollipop(15,6)"
    std::size_t n = 0;
    std::size_t m = 0;     // arcs for cluster rows, edges otherwise
    std::string params;    // "p=0.5", "w_path=1;w_clique=2", ...
    std::uint64_t reps = 0;
    std::uint64_t seed = 0;
    Moments init_draws, resampled_vars, rounds, total_draws;
    /// Upper bound on the expected total draws.
    double bound = 0.0;
    /// Family-specific normalized value; see bench_csv_schema().
    double ratio = 0.0;
    bool within_bound = false;  // mean total <= bound + 3 stderr
    /// Column maximum of mean per-variable resamples and its bound (cluster rows only).
    double max_variable_mean = 0.0;
    double max_variable_stderr = 0.0;
    double variable_bound = 0.0;
    bool variables_within_bound = true;  // every arc: mean <= variable_bound + 3 stderr
};

enum class BenchFamily { lollipop_cluster, lollipop_cycle, cycle_sink, random_bound_sweep };

BenchFamily parse_bench_family(const std::string& name);

struct BenchOptions {
    BenchFamily family = BenchFamily::cycle_sink;
    /// n for cycle-sink, n2 for the lollipop families, n for sweep sizes.
    std::vector<std::size_t> sizes;
    std::uint64_t reps = 1000;
    std::uint64_t seed = 1;
    double p = 0.5;
    /// Clique-to-path weight ratio for lollipop-cycle.
    double weight_ratio = 2.0;
    /// Sweep: "cluster", "cycle" or "sink".
    std::string kind = "cluster";
    std::size_t instances_per_size = 3;
};

std::vector<BenchRow> run_bench(const BenchOptions& options);

/// Runs one bench row; exposed for tests. Replicate r uses table seed seed ^ r.
BenchRow bench_cluster(const UndirectedGraph& g, Vertex root, std::uint64_t reps, std::uint64_t seed);
BenchRow bench_cycle(const UndirectedGraph& g, Vertex root, std::uint64_t reps, std::uint64_t seed);
BenchRow bench_sink(const UndirectedGraph& g, std::uint64_t reps, std::uint64_t seed);

std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& row);
/// Column documentation printed by `bench --help`.
std::string bench_csv_schema();

}  // namespace prs
