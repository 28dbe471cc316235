#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prs/oracle.hpp"
#include "prs/statistics.hpp"

namespace prs {

struct VerifyConfig {
    std::uint64_t samples = 100'000;
    std::uint64_t seed = 1;
    std::size_t max_vertices = 5;
    double tv_tolerance = 0.01;
    /// Instances whose expected TV noise exceeds this fraction of the
    /// tolerance are judged by a chi-square test instead.
    double tv_noise_fraction = 0.5;
    double chi_square_alpha = 1e-4;
    double z_limit = 3.0;
    double identity_tolerance = 1e-12;
    std::vector<double> cluster_probs{0.2, 0.5, 0.8};
    /// Cluster instances use the Tarjan sampler unless set.
    bool cluster_naive = false;
};

struct GridInstance {
    SamplerKind kind;
    UndirectedGraph graph;
    Vertex root;
    std::string label;
};

/// Clusters: every connected graph on 2..max_n vertices (up to isomorphism),
/// every root, every probability. Cycles: same graphs, root 0, uniform
/// weights and weights 1, 2, ..., m by edge index. Sinks: connected graphs
/// on up to max_n vertices that are not trees.
std::vector<GridInstance> test_grid(SamplerKind kind, const VerifyConfig& config);

struct InstanceResult {
    GridInstance instance;
    std::size_t support = 0;
    std::uint64_t samples = 0;
    double tv = 0.0;
    double tv_noise = 0.0;
    bool tv_applicable = false;
    ChiSquare chi{0.0, 0, 1.0};
    bool distribution_ok = false;

    double exact_resampled = 0.0;
    MeanAccumulator resampled{};
    double z = 0.0;
    bool expectation_ok = false;

    double bound = 0.0;
    MeanAccumulator total{};
    bool bound_ok = false;
    /// Cluster instances: the largest per-arc mean and whether every arc
    /// respects p n/(1-p) + 3 stderr.
    double per_variable_bound = 0.0;
    double max_per_variable_mean = 0.0;
    bool per_variable_ok = true;
    /// Largest |empirical - exact| per-variable mean in units of stderr.
    double max_per_variable_z = 0.0;

    std::uint64_t extremality_violations = 0;
    std::uint64_t invariant_violations = 0;
};

/// Samples one grid instance `config.samples` times with the extremality
/// check and pop verification on, and compares against the oracle.
InstanceResult run_instance(const GridInstance& instance, std::uint64_t seed,
                            const VerifyConfig& config);

std::vector<InstanceResult> run_grid(SamplerKind kind, const VerifyConfig& config);

struct CheckLine {
    std::string instance;
    bool passed;
    std::string detail;
};

struct SuiteReport {
    std::string name;
    std::vector<CheckLine> checks;

    std::size_t failures() const;
    bool passed() const { return failures() == 0; }
};

SuiteReport distributions_report(const std::vector<InstanceResult>& results);
SuiteReport expectations_report(const std::vector<InstanceResult>& results);
SuiteReport bounds_report(const std::vector<InstanceResult>& results);

/// Z_reach(bidirect(g), r) against Z_rel(g) for every connected graph on
/// up to max_vertices vertices, every root and every probability.
SuiteReport verify_identity(const VerifyConfig& config);

/// Runs a named suite: distributions, expectations, identity or bounds.
SuiteReport run_suite(const std::string& name, const VerifyConfig& config);

}  // namespace prs
