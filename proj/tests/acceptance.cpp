// Acceptance suite: one PASS/FAIL line per criterion.
//
// Exit status is 0 iff every criterion passes, except those named with
// --known-unattainable, whose lines are still printed as they come out.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "prs/bench.hpp"
#include "prs/cluster_popping.hpp"
#include "prs/cycle_popping.hpp"
#include "prs/generators.hpp"
#include "prs/reliability.hpp"
#include "prs/sink_popping.hpp"
#include "prs/verify.hpp"

using namespace prs;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

struct Settings {
    std::uint64_t samples = 100'000;
    std::uint64_t bench_reps = 10'000;
    std::size_t trials = 20;
    std::size_t pairs = 1000;
    bool verbose = false;
};

std::string fmt(double x, int precision = 4) {
    std::ostringstream out;
    out.precision(precision);
    out << x;
    return out.str();
}

struct GridRuns {
    std::vector<InstanceResult> cluster, cycle, sink;

    std::vector<const InstanceResult*> all() const {
        std::vector<const InstanceResult*> out;
        for (const auto* part : {&cluster, &cycle, &sink})
            for (const auto& r : *part) out.push_back(&r);
        return out;
    }
};

void note(const Settings& s, const std::string& line) {
    if (s.verbose) std::cout << "    " << line << '\n';
}

Outcome distribution_exactness(const GridRuns& runs, const Settings& s) {
    Outcome o;
    std::size_t over = 0, over_noisy = 0, chi_fail = 0, total = 0;
    double worst_quiet = 0.0, min_p = 1.0;
    for (const auto* r : runs.all()) {
        ++total;
        min_p = std::min(min_p, r->chi.p_value);
        if (r->chi.p_value < 1e-4) ++chi_fail;
        // An exact sampler's own noise floor; above 0.01 the tolerance is out of reach.
        const bool noisy = r->tv_noise > 0.01;
        if (!noisy) worst_quiet = std::max(worst_quiet, r->tv);
        if (r->tv > 0.01) {
            ++over;
            over_noisy += noisy;
            note(s, "tv " + fmt(r->tv) + " (expected " + fmt(r->tv_noise) + ", support " +
                        std::to_string(r->support) + ") " + r->instance.label);
        }
    }
    o.passed = over == 0;
    o.detail = std::to_string(total - over) + "/" + std::to_string(total) + " instances with TV <= 0.01; " +
               std::to_string(over_noisy) + " of the " + std::to_string(over) +
               " misses have an exact-sampler noise floor above 0.01; max TV where the floor is below 0.01: " +
               fmt(worst_quiet) + "; chi-square p >= 1e-4 on " + std::to_string(total - chi_fail) + "/" +
               std::to_string(total) + " (min p " + fmt(min_p) + ")";
    return o;
}

Outcome expected_resamples(const GridRuns& runs, const Settings& s) {
    Outcome o;
    std::size_t bad = 0, total = 0;
    double worst = 0.0;
    for (const auto* r : runs.all()) {
        ++total;
        worst = std::max(worst, std::abs(r->z));
        if (!r->expectation_ok) {
            ++bad;
            note(s, "z " + fmt(r->z) + " " + r->instance.label);
        }
    }
    o.passed = bad == 0;
    o.detail = std::to_string(total - bad) + "/" + std::to_string(total) +
               " instances with mean resampled_vars within 3 stderr of the exact value (max |z| " + fmt(worst, 3) + ")";
    return o;
}

Outcome sink_tightness(const Settings& s) {
    Outcome o;
    std::ostringstream d;
    for (std::size_t n : {10, 50}) {
        const auto g = cycle_graph(n);
        MeanAccumulator acc;
        for (std::uint64_t r = 0; r < s.bench_reps; ++r) {
            ResamplingTable table(1 ^ r, g.m());
            acc.add(static_cast<double>(sample_sink_free(g, table, {true, kDefaultMaxDraws}).stats.total_draws()));
        }
        const double target = static_cast<double>(n * n);
        const double rel = acc.mean() / target - 1.0;
        o.passed &= std::abs(rel) <= 0.02;
        d << "C" << n << ": " << fmt(acc.mean(), 6) << " vs " << n * n << " (" << fmt(100 * rel, 3) << "%)  ";
    }
    o.detail = d.str();
    return o;
}

std::vector<BenchRow> sweep(const std::string& kind, const Settings& s) {
    BenchOptions b;
    b.family = BenchFamily::random_bound_sweep;
    b.kind = kind;
    b.reps = std::max<std::uint64_t>(s.bench_reps / 10, 100);
    return run_bench(b);
}

std::vector<BenchRow> lollipops(BenchFamily family, const Settings& s) {
    BenchOptions b;
    b.family = family;
    b.sizes = {6, 10};
    b.reps = s.bench_reps;
    b.p = 0.5;
    return run_bench(b);
}

Outcome ratio_trend(const std::vector<BenchRow>& rows, std::ostringstream& d) {
    Outcome o;
    double prev = 0.0;
    for (const auto& r : rows) {
        o.passed &= r.ratio >= 0.4 && r.ratio <= 1.0 && r.ratio >= prev;
        prev = r.ratio;
        d << r.instance << " " << fmt(r.ratio) << "  ";
    }
    return o;
}

Outcome cluster_bounds(const GridRuns& runs, const Settings& s) {
    Outcome o;
    std::size_t tested = 0, a_bad = 0, c_bad = 0;
    for (const auto& r : runs.cluster) {
        ++tested;
        a_bad += !r.bound_ok;
        c_bad += !r.per_variable_ok;
        if (!r.bound_ok || !r.per_variable_ok) note(s, "bound miss " + r.instance.label);
    }
    const auto sweep_rows = sweep("cluster", s);
    const auto lolly = lollipops(BenchFamily::lollipop_cluster, s);
    for (const auto* rows : {&sweep_rows, &lolly})
        for (const auto& r : *rows) {
            ++tested;
            a_bad += !r.within_bound;
            c_bad += !r.variables_within_bound;
        }
    std::ostringstream d;
    d << "(a) " << tested - a_bad << "/" << tested << " within bound; (b) ratios ";
    const auto b = ratio_trend(lolly, d);
    d << "; (c) " << tested - c_bad << "/" << tested << " with every arc within p n/(1-p) + 3 stderr";
    o.passed = a_bad == 0 && c_bad == 0 && b.passed;
    o.detail = d.str();
    return o;
}

Outcome cycle_bounds(const GridRuns& runs, const Settings& s) {
    Outcome o;
    std::size_t tested = 0, bad = 0;
    for (const auto& r : runs.cycle) {
        ++tested;
        bad += !r.bound_ok;
    }
    const auto sweep_rows = sweep("cycle", s);
    const auto lolly = lollipops(BenchFamily::lollipop_cycle, s);
    for (const auto* rows : {&sweep_rows, &lolly})
        for (const auto& r : *rows) {
            ++tested;
            bad += !r.within_bound;
        }
    std::ostringstream d;
    d << tested - bad << "/" << tested << " within (n-1) + 2 r_max m n + 3 stderr; lollipop ratios ";
    const auto b = ratio_trend(lolly, d);
    o.passed = bad == 0 && b.passed;
    o.detail = d.str();
    return o;
}

std::uint64_t g_violations = 0;

Outcome naive_tarjan_equivalence(const Settings& s) {
    Outcome o;
    std::mt19937_64 rng(2024);
    std::size_t same = 0;
    std::uint64_t pops = 0;
    for (std::size_t i = 0; i < s.pairs; ++i) {
        const std::size_t n = 2 + rng() % 9;
        const auto g = random_connected_graph(n, 0.35, rng, 0.1, 0.9);
        const auto d = bidirect(g);
        const Vertex root = static_cast<Vertex>(rng() % n);
        const std::uint64_t seed = rng();
        ResamplingTable a(seed, d.m()), b(seed, d.m());
        try {
            const auto x = sample_root_connected_naive(d, root, a, {true, false, kDefaultMaxDraws});
            const auto y = sample_root_connected_tarjan(d, root, b, {false, true, kDefaultMaxDraws});
            pops += y.stats.rounds;
            same += x.value == y.value && x.stats.per_variable_resamples == y.stats.per_variable_resamples;
        } catch (const std::logic_error& e) {
            ++g_violations;
            note(s, std::string("assertion: ") + e.what());
        }
    }
    o.passed = same == s.pairs;
    o.detail = std::to_string(same) + "/" + std::to_string(s.pairs) +
               " pairs with identical subsets and resample counts; " + std::to_string(pops) + " verified pops";
    return o;
}

std::vector<UndirectedGraph> reliability_graphs() {
    std::vector<UndirectedGraph> graphs;
    for (std::size_t n = 2; n <= 5; ++n)
        for (const auto& g : connected_graphs(n)) graphs.push_back(g);
    graphs.push_back(cycle_graph(6));
    graphs.push_back(lollipop(2, 4, 0.5));
    // 6 vertices and 12 edges: a hexagon with six chords.
    graphs.push_back(UndirectedGraph(6, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 4, 0}, {4, 5, 0}, {5, 0, 0},
                                         {0, 2, 0}, {0, 3, 0}, {1, 4, 0}, {2, 5, 0}, {3, 5, 0}, {1, 3, 0}}));
    // 8 vertices and 12 edges: an octagon with its four diameters.
    std::vector<UndirectedGraph::Edge> oct;
    for (Vertex i = 0; i < 8; ++i) oct.push_back({i, (i + 1) % 8, 0});
    for (Vertex i = 0; i < 4; ++i) oct.push_back({i, i + 4, 0});
    graphs.push_back(UndirectedGraph(8, oct));
    // 13-vertex binary tree, 12 edges.
    std::vector<UndirectedGraph::Edge> tree;
    for (Vertex i = 1; i < 13; ++i) tree.push_back({(i - 1) / 2, i, 0});
    graphs.push_back(UndirectedGraph(13, tree));
    return graphs;
}

Outcome reliability_accuracy(const Settings& s) {
    Outcome o;
    std::size_t cases = 0, good_cases = 0, min_hits = s.trials;
    const std::size_t need = (s.trials * 9 + 9) / 10;  // 18 of 20
    for (const auto& base : reliability_graphs()) {
        for (double p : {0.2, 0.5, 0.8}) {
            const auto g = base.with_uniform_value(p);
            const double exact = static_cast<double>(brute_force_zrel(g));
            std::size_t hits = 0;
            for (std::size_t t = 0; t < s.trials; ++t) {
                const double v = estimate_reliability(g, {0.1, t + 1}).value;
                hits += std::abs(v / exact - 1.0) <= 0.1;
            }
            ++cases;
            good_cases += hits >= need;
            min_hits = std::min(min_hits, hits);
            if (hits < need)
                note(s, std::to_string(hits) + "/" + std::to_string(s.trials) + " n=" + std::to_string(g.n()) +
                            " m=" + std::to_string(g.m()) + " p=" + fmt(p));
        }
    }
    o.passed = good_cases == cases;
    o.detail = std::to_string(good_cases) + "/" + std::to_string(cases) + " (graph, p) cases with >= " +
               std::to_string(need) + "/" + std::to_string(s.trials) +
               " estimates within 10%; fewest hits in any case " + std::to_string(min_hits);
    return o;
}

Outcome identity(const Settings& s) {
    VerifyConfig config;
    const auto report = verify_identity(config);
    double worst = 0.0;
    for (const auto& c : report.checks) {
        const auto pos = c.detail.find("rel_err=");
        worst = std::max(worst, std::stod(c.detail.substr(pos + 8)));
        if (!c.passed) note(s, c.instance + " " + c.detail);
    }
    return {report.passed(), std::to_string(report.checks.size() - report.failures()) + "/" +
                                 std::to_string(report.checks.size()) +
                                 " (graph, root, p) cases; max relative error " + fmt(worst, 3)};
}

Outcome extremality(const GridRuns& runs) {
    std::uint64_t extremal = 0, invariant = 0;
    for (const auto* r : runs.all()) {
        extremal += r->extremality_violations;
        invariant += r->invariant_violations;
    }
    const std::uint64_t total = extremal + invariant + g_violations;
    return {total == 0, std::to_string(extremal) + " shared-variable events, " + std::to_string(invariant) +
                            " invariant failures on the grid; " + std::to_string(g_violations) +
                            " assertions in the equivalence runs"};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    Settings s;
    std::vector<int> known;
    std::vector<int> only;
    app.add_option("--samples", s.samples, "Samples per grid instance");
    app.add_option("--bench-reps", s.bench_reps, "Replicates for the tightness benches");
    app.add_option("--trials", s.trials, "Reliability trials per case");
    app.add_option("--pairs", s.pairs, "Random (graph, seed) pairs for the equivalence check");
    app.add_option("--known-unattainable", known, "Criteria whose failure does not affect the exit status");
    app.add_option("--only", only, "Run only these criteria");
    app.add_flag("--verbose", s.verbose, "Print the instances behind each failure");
    CLI11_PARSE(app, argc, argv);

    auto wanted = [&](int c) { return only.empty() || std::find(only.begin(), only.end(), c) != only.end(); };
    const bool need_grid = wanted(1) || wanted(2) || wanted(4) || wanted(5) || wanted(9);

    GridRuns runs;
    if (need_grid) {
        VerifyConfig config;
        config.samples = s.samples;
        runs.cluster = run_grid(SamplerKind::cluster, config);
        runs.cycle = run_grid(SamplerKind::cycle, config);
        runs.sink = run_grid(SamplerKind::sink, config);
    }

    const std::vector<std::pair<int, std::string>> names{
        {1, "distribution exactness"}, {2, "expected resampled variables"}, {3, "sink-popping tightness on C_n"},
        {4, "cluster-popping bounds"}, {5, "cycle-popping bound"},          {6, "naive/Tarjan equivalence"},
        {7, "reliability accuracy"},   {8, "reachability-reliability identity"}, {9, "extremality assertions"}};

    int failing = 0;
    for (const auto& [id, name] : names) {
        if (!wanted(id)) continue;
        if (id == 9 && !wanted(6)) naive_tarjan_equivalence(s);  // criterion 9 also covers these runs
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        switch (id) {
            case 1: o = distribution_exactness(runs, s); break;
            case 2: o = expected_resamples(runs, s); break;
            case 3: o = sink_tightness(s); break;
            case 4: o = cluster_bounds(runs, s); break;
            case 5: o = cycle_bounds(runs, s); break;
            case 6: o = naive_tarjan_equivalence(s); break;
            case 7: o = reliability_accuracy(s); break;
            case 8: o = identity(s); break;
            case 9: o = extremality(runs); break;
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool excused = std::find(known.begin(), known.end(), id) != known.end();
        std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << id << " " << name << ": " << o.detail;
        if (!o.passed && excused) std::cout << " [known unattainable]";
        std::cout << " (" << fmt(secs, 3) << " s)" << std::endl;
        if (!o.passed && !excused) ++failing;
    }
    return failing == 0 ? 0 : 1;
}
