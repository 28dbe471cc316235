#include "prs/verify.hpp"

#include <cmath>
#include <sstream>

#include "prs/cluster_popping.hpp"
#include "prs/cycle_popping.hpp"
#include "prs/generators.hpp"
#include "prs/reliability.hpp"
#include "prs/sink_popping.hpp"

namespace prs {

namespace {

std::string describe(const UndirectedGraph& g) {
    std::ostringstream out;
    out << "n=" << g.n() << " E={";
    for (EdgeId e = 0; e < g.m(); ++e) out << (e ? " " : "") << g.edge(e).u << '-' << g.edge(e).v;
    out << '}';
    return out.str();
}

std::string fmt(double x, int precision = 4) {
    std::ostringstream out;
    out.precision(precision);
    out << x;
    return out.str();
}

}  // namespace

std::vector<GridInstance> test_grid(SamplerKind kind, const VerifyConfig& config) {
    std::vector<GridInstance> grid;
    for (std::size_t n = 2; n <= config.max_vertices; ++n) {
        for (const auto& base : connected_graphs(n)) {
            switch (kind) {
                case SamplerKind::cluster:
                    for (double p : config.cluster_probs)
                        for (Vertex r = 0; r < n; ++r)
                            grid.push_back({kind, base.with_uniform_value(p), r,
                                            describe(base) + " root=" + std::to_string(r) + " p=" + fmt(p)});
                    break;
                case SamplerKind::cycle: {
                    grid.push_back({kind, base.with_uniform_value(1.0), 0, describe(base) + " w=uniform"});
                    if (base.m() > 1) {
                        std::vector<double> w(base.m());
                        for (EdgeId e = 0; e < base.m(); ++e) w[e] = static_cast<double>(e + 1);
                        grid.push_back({kind, base.with_values(w), 0, describe(base) + " w=1..m"});
                    }
                    break;
                }
                case SamplerKind::sink:
                    if (!has_tree_component(base)) grid.push_back({kind, base, 0, describe(base)});
                    break;
            }
        }
    }
    return grid;
}

InstanceResult run_instance(const GridInstance& instance, std::uint64_t seed,
                            const VerifyConfig& config) {
    InstanceResult res{.instance = instance};
    const auto& g = instance.graph;
    Counts counts;
    ExactSummary exact;
    std::vector<MeanAccumulator> per_var;
    const double n = static_cast<double>(g.n());

    auto record = [&](std::uint64_t key, const RunStats& stats) {
        ++counts[key];
        res.resampled.add(static_cast<double>(stats.resampled_vars));
        res.total.add(static_cast<double>(stats.total_draws()));
        if (per_var.empty()) per_var.resize(stats.per_variable_resamples.size());
        for (std::size_t i = 0; i < per_var.size(); ++i)
            per_var[i].add(static_cast<double>(stats.per_variable_resamples[i]));
    };

    switch (instance.kind) {
        case SamplerKind::cluster: {
            const auto d = bidirect(g);
            exact = exact_cluster_summary(d, instance.root);
            const double p = d.max_fail_prob(), m = static_cast<double>(d.m());
            res.bound = m + p * m * n / (1.0 - p);
            res.per_variable_bound = p * n / (1.0 - p);
            ClusterOptions options;
            options.extremality_check = true;
            options.verify_pops = true;
            for (std::uint64_t j = 0; j < config.samples; ++j) {
                ResamplingTable table(derive_seed(seed, j), d.m());
                try {
                    const auto s = config.cluster_naive
                                       ? sample_root_connected_naive(d, instance.root, table, options)
                                       : sample_root_connected_tarjan(d, instance.root, table, options);
                    record(outcome_key(s.value), s.stats);
                } catch (const ExtremalityViolation&) {
                    ++res.extremality_violations;
                } catch (const InvariantViolation&) {
                    ++res.invariant_violations;
                }
            }
            break;
        }
        case SamplerKind::cycle: {
            exact = exact_cycle_summary(g, instance.root);
            const double r_max = g.max_value() / g.min_value(), m = static_cast<double>(g.m());
            res.bound = (n - 1.0) + 2.0 * r_max * m * n;
            for (std::uint64_t j = 0; j < config.samples; ++j) {
                ResamplingTable table(derive_seed(seed, j), g.n());
                try {
                    const auto s = sample_spanning_tree(g, instance.root, table, {true, kDefaultMaxDraws});
                    if (!is_spanning_tree(g, s.value)) ++res.invariant_violations;
                    record(outcome_key(g, s.value), s.stats);
                } catch (const ExtremalityViolation&) {
                    ++res.extremality_violations;
                }
            }
            break;
        }
        case SamplerKind::sink: {
            exact = exact_sink_summary(g);
            res.bound = static_cast<double>(g.m()) + n * (n - 1.0);
            for (std::uint64_t j = 0; j < config.samples; ++j) {
                ResamplingTable table(derive_seed(seed, j), g.m());
                try {
                    const auto s = sample_sink_free(g, table, {true, kDefaultMaxDraws});
                    if (!find_sinks(g, s.value).empty()) ++res.invariant_violations;
                    record(outcome_key(s.value), s.stats);
                } catch (const ExtremalityViolation&) {
                    ++res.extremality_violations;
                }
            }
            break;
        }
    }

    res.samples = res.resampled.count();
    res.support = exact.distribution.size();
    res.tv = tv_distance(counts, exact.distribution);
    res.tv_noise = expected_tv_noise(exact.distribution, config.samples);
    res.tv_applicable = res.tv_noise <= config.tv_noise_fraction * config.tv_tolerance;
    res.chi = chi_square_test(counts, exact.distribution);
    res.distribution_ok = res.tv_applicable ? res.tv <= config.tv_tolerance
                                            : res.chi.p_value >= config.chi_square_alpha;

    res.exact_resampled = exact.expected_resampled;
    const double se = res.resampled.stderr_of_mean();
    const double diff = res.resampled.mean() - res.exact_resampled;
    res.z = se > 0 ? diff / se : (std::abs(diff) < 1e-12 ? 0.0 : INFINITY);
    res.expectation_ok = std::abs(res.z) <= config.z_limit;

    res.bound_ok = res.total.mean() <= res.bound + config.z_limit * res.total.stderr_of_mean();
    for (std::size_t i = 0; i < per_var.size(); ++i) {
        const auto& a = per_var[i];
        res.max_per_variable_mean = std::max(res.max_per_variable_mean, a.mean());
        if (instance.kind == SamplerKind::cluster)
            res.per_variable_ok &= a.mean() <= res.per_variable_bound + config.z_limit * a.stderr_of_mean();
        const double vse = a.stderr_of_mean();
        const double vdiff = std::abs(a.mean() - exact.expected_per_variable[i]);
        res.max_per_variable_z =
            std::max(res.max_per_variable_z, vse > 0 ? vdiff / vse : (vdiff < 1e-12 ? 0.0 : INFINITY));
    }
    return res;
}

std::vector<InstanceResult> run_grid(SamplerKind kind, const VerifyConfig& config) {
    std::vector<InstanceResult> results;
    const auto grid = test_grid(kind, config);
    const std::uint64_t kind_seed = derive_seed(config.seed, static_cast<std::uint64_t>(kind));
    for (std::size_t i = 0; i < grid.size(); ++i)
        results.push_back(run_instance(grid[i], derive_seed(kind_seed, i), config));
    return results;
}

std::size_t SuiteReport::failures() const {
    std::size_t f = 0;
    for (const auto& c : checks) f += !c.passed;
    return f;
}

namespace {

const char* kind_name(SamplerKind k) {
    switch (k) {
        case SamplerKind::cluster: return "cluster";
        case SamplerKind::cycle: return "cycle";
        case SamplerKind::sink: return "sink";
    }
    return "?";
}

std::string label(const InstanceResult& r) {
    return std::string(kind_name(r.instance.kind)) + " " + r.instance.label;
}

}  // namespace

SuiteReport distributions_report(const std::vector<InstanceResult>& results) {
    SuiteReport report{"distributions", {}};
    for (const auto& r : results) {
        std::string detail = "support=" + std::to_string(r.support) + " tv=" + fmt(r.tv) +
                             " tv_noise=" + fmt(r.tv_noise);
        detail += r.tv_applicable ? " [tv]" : " [chi2 p=" + fmt(r.chi.p_value) + " dof=" + std::to_string(r.chi.dof) + "]";
        const bool ok = r.distribution_ok && r.extremality_violations == 0 && r.invariant_violations == 0;
        report.checks.push_back({label(r), ok, detail});
    }
    return report;
}

SuiteReport expectations_report(const std::vector<InstanceResult>& results) {
    SuiteReport report{"expectations", {}};
    for (const auto& r : results) {
        const std::string detail = "mean=" + fmt(r.resampled.mean(), 6) + " exact=" +
                                   fmt(r.exact_resampled, 6) + " z=" + fmt(r.z, 3);
        report.checks.push_back({label(r), r.expectation_ok, detail});
    }
    return report;
}

SuiteReport bounds_report(const std::vector<InstanceResult>& results) {
    SuiteReport report{"bounds", {}};
    for (const auto& r : results) {
        std::string detail = "total=" + fmt(r.total.mean(), 6) + " bound=" + fmt(r.bound, 6);
        if (r.instance.kind == SamplerKind::cluster)
            detail += " max_arc=" + fmt(r.max_per_variable_mean) + " arc_bound=" + fmt(r.per_variable_bound);
        report.checks.push_back({label(r), r.bound_ok && r.per_variable_ok, detail});
    }
    return report;
}

SuiteReport verify_identity(const VerifyConfig& config) {
    SuiteReport report{"identity", {}};
    for (std::size_t n = 1; n <= config.max_vertices; ++n) {
        for (const auto& base : connected_graphs(n)) {
            for (double p : config.cluster_probs) {
                const auto g = base.with_uniform_value(p);
                const long double zrel = brute_force_zrel(g);
                const auto d = bidirect(g);
                for (Vertex r = 0; r < n; ++r) {
                    const long double zreach = brute_force_zreach(d, r);
                    const double rel = static_cast<double>(std::abs(zreach - zrel) / zrel);
                    report.checks.push_back({describe(g) + " root=" + std::to_string(r) + " p=" + fmt(p),
                                             rel <= config.identity_tolerance,
                                             "Z_rel=" + fmt(static_cast<double>(zrel), 12) +
                                                 " rel_err=" + fmt(rel, 3)});
                }
            }
        }
    }
    return report;
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& config) {
    if (name == "identity") return verify_identity(config);
    if (name != "distributions" && name != "expectations" && name != "bounds")
        throw InvalidInput("unknown suite: " + name);
    std::vector<InstanceResult> all;
    for (auto kind : {SamplerKind::cluster, SamplerKind::cycle, SamplerKind::sink}) {
        auto part = run_grid(kind, config);
        all.insert(all.end(), part.begin(), part.end());
    }
    if (name == "distributions") return distributions_report(all);
    if (name == "expectations") return expectations_report(all);
    return bounds_report(all);
}

}  // namespace prs
