#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prs/cluster_popping.hpp"
#include "prs/graph.hpp"

namespace prs {

/// p' with odds(p') = odds(p) * exp(-beta); beta = +inf gives 0.
double modified_prob(double p, double beta);

/// Annealing over root-connected subgraphs of the bi-directed graph.
///
/// T is an arborescence toward the root, H(R) = |T \ R| counts missing tree
/// arcs and the tilt is
///   F(R) = prod_{a in T\R} p_a/(1-p_a) * prod_{a in R\T} (1-p_a) * prod_{a not in T u R} p_a,
/// so that rho_beta(R) ~ exp(-beta H(R)) F(R) is cluster-popping with the
/// tree arcs' failure probabilities replaced by modified_prob(p_a, beta).
class GibbsInstance {
public:
    /// `g` must be connected with probabilities in (0, 1).
    explicit GibbsInstance(const UndirectedGraph& g, Vertex root = 0);

    const DirectedGraph& graph() const { return graph_; }
    Vertex root() const { return root_; }
    const ArcSubset& tree() const { return tree_; }

    std::size_t hamiltonian(const ArcSubset& r) const;
    std::size_t max_energy() const { return graph_.n() - 1; }
    double tilt(const ArcSubset& r) const;

    /// prod over tree arcs of (1 - p_a).
    double tree_survival() const;

    /// Graph whose tree arcs fail with modified_prob(p_a, beta).
    DirectedGraph tilted(double beta) const;

private:
    DirectedGraph graph_;
    Vertex root_;
    ArcSubset tree_;
};

/// Exact sample from rho_beta (beta may be +inf).
ArcSubset rho_beta_sample(const GibbsInstance& gi, double beta, ResamplingTable& table);

struct AnnealSchedule {
    double step = 0.0;
    /// beta_0 = 0 < ... < beta_K; stage i estimates Z(beta_{i+1}) / Z(beta_i),
    /// then a terminal stage at beta_K estimates Pr[H = 0].
    std::vector<double> betas;
    double target_beta = 0.0;
    std::size_t samples_per_stage = 0;
    /// (n-1) log(1/(1-p_max)), an upper bound on log Z(0)/Z(inf).
    double log_q_bound = 0.0;
};

/// Uniform step 1/(n-1), K = ceil(beta_K (n-1)) stages with
/// beta_K = max(0, ln(2(n-1) p_max/(1-p_max))) + ln 4, and ceil(8K/eps^2)
/// samples per stage.
AnnealSchedule make_schedule(const GibbsInstance& gi, double epsilon);

struct StageDiagnostics {
    double beta;
    /// Mean of exp(-step H) for ratio stages, fraction with H = 0 for the terminal stage.
    double ratio;
    std::size_t samples;
    bool terminal;
};

struct ReliabilityEstimate {
    double value = 1.0;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    AnnealSchedule schedule;
    /// Stages of the first repetition.
    std::vector<StageDiagnostics> stages;
    /// One estimate per repetition; `value` is their median.
    std::vector<double> repetitions;
};

struct ReliabilityOptions {
    double epsilon = 0.1;
    std::uint64_t seed = 1;
    /// When set, the median of enough repetitions (at least 5) that a
    /// majority of 3/4-reliable runs succeeds with this probability.
    std::optional<double> confidence;
    Vertex root = 0;
};

/// Repetitions needed for `confidence`, assuming each run succeeds w.p. 3/4.
std::size_t repetitions_for_confidence(double confidence);

/// All-terminal reliability by annealing from beta = 0 to beta = inf.
/// Throws InvalidInput for disconnected graphs or eps outside (0, 1).
ReliabilityEstimate estimate_reliability(const UndirectedGraph& g,
                                         const ReliabilityOptions& options = {});

inline constexpr std::size_t kBruteForceMaxVariables = 24;

/// Probability that (V, surviving edges) is connected, by enumerating all
/// edge subsets. m <= 24.
long double brute_force_zrel(const UndirectedGraph& g);

/// Total weight of root-connected arc subsets, by enumeration. m <= 24.
long double brute_force_zreach(const DirectedGraph& d, Vertex root);

}  // namespace prs
