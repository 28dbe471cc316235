#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "prs/cycle_popping.hpp"
#include "prs/graph.hpp"
#include "prs/sink_popping.hpp"

namespace prs {

/// Ground truth by enumerating the whole assignment space.
///
/// An assignment is perfect (no bad event), has exactly one bad event, or
/// several. For an extremal instance the expected number of resampled
/// variables is sum_i q_i |vbl(A_i)| / q_empty, where q_i is the probability
/// that A_i is the only occurring event.
struct ExactSummary {
    struct EventMass {
        /// Cluster: sorted vertices. Cycle: vertex sequence from its smallest vertex. Sink: {v}.
        std::vector<std::size_t> key;
        double q;
        std::size_t vbl_size;
    };

    /// pi over perfect outcomes, keyed by outcome_key().
    std::map<std::uint64_t, double> distribution;
    double q_empty = 0.0;
    double q_multi = 0.0;
    std::vector<EventMass> events;
    double expected_resampled = 0.0;
    /// Same indexing as the sampler's per-variable stats.
    std::vector<double> expected_per_variable;
    std::uint64_t assignments = 0;
    /// Total probability over all assignments; 1 up to rounding.
    double total_mass = 0.0;
};

inline constexpr std::uint64_t kMaxBinaryAssignments = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kMaxArrowAssignments = 10'000'000;

ExactSummary exact_cluster_summary(const DirectedGraph& d, Vertex root);
ExactSummary exact_cycle_summary(const UndirectedGraph& g, Vertex root);
ExactSummary exact_sink_summary(const UndirectedGraph& g);

/// Bit i of the key is bit i of the subset (m <= 64).
std::uint64_t outcome_key(const std::vector<bool>& bits);
/// Mixed radix over non-root vertices ascending, digit = incidence position.
std::uint64_t outcome_key(const UndirectedGraph& g, const ArrowAssignment& arrows);

enum class SamplerKind { cluster, cycle, sink };

/// Target distribution of the sampler of the given kind. Clusters use the
/// bi-directed version of `g` with edge values as failure probabilities;
/// cycles use edge values as weights; sinks ignore values.
std::map<std::uint64_t, double> exact_distribution(SamplerKind kind, const UndirectedGraph& g,
                                                   Vertex root = 0);

/// Expected total arrow draws of cycle-popping toward `root`, via the
/// Green's function of the weighted random walk killed at the root:
/// trace((I - P restricted to V \ {root})^{-1}).
double expected_cycle_draws_green(const UndirectedGraph& g, Vertex root);

}  // namespace prs
