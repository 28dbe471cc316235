#pragma once

#include <vector>

#include "prs/graph.hpp"
#include "prs/prs.hpp"

namespace prs {

template <class T>
struct Sampled {
    T value;
    RunStats stats;
};

/// Minimal clusters of (V, s) with respect to `root`: vertex sets without
/// the root that no arc of `s` leaves, and that contain no smaller such set.
///
/// They are exactly the sink strongly connected components avoiding the
/// root. A sink SCC C is a cluster, and any sub-cluster C' of C would be
/// closed under out-arcs, yet strong connectivity lets every vertex of C'
/// reach all of C, so C' = C. Conversely a minimal cluster is strongly
/// connected, has no out-arcs, hence is a sink SCC.
///
/// Each cluster is sorted; clusters are ordered by smallest vertex.
std::vector<std::vector<Vertex>> find_minimal_clusters(const DirectedGraph& d, const ArcSubset& s,
                                                       Vertex root);

/// Draws arc `a` from the table: present with probability 1 - p_a.
inline bool draw_arc(const DirectedGraph& d, ArcId a, ResamplingTable& table) {
    return table.draw(a).uniform() < 1.0 - d.fail_prob(a);
}

/// Round-based cluster-popping expressed as a PRS instance.
class ClusterInstance {
public:
    ClusterInstance(const DirectedGraph& d, Vertex root);

    std::size_t variable_count() const { return d_->m(); }
    void draw(std::size_t arc, ResamplingTable& table) { state_[arc] = draw_arc(*d_, arc, table); }
    void occurring_events(std::vector<BadEvent>& events) const;

    const ArcSubset& state() const { return state_; }

private:
    const DirectedGraph* d_;
    Vertex root_;
    ArcSubset state_;
};

struct ClusterOptions {
    /// Check that simultaneously popped clusters are variable-disjoint.
    bool extremality_check = false;
    /// Tarjan variant: confirm every popped set against find_minimal_clusters
    /// and that settled vertices are never resampled.
    bool verify_pops = false;
    std::uint64_t max_draws = kDefaultMaxDraws;
};

/// Throws InvalidInput when the full graph is not root-connected.
void require_root_connected(const DirectedGraph& d, Vertex root);

/// Round-based cluster-popping: each round resamples every out-arc of every
/// vertex lying in some minimal cluster.
Sampled<ArcSubset> sample_root_connected_naive(const DirectedGraph& d, Vertex root,
                                               ResamplingTable& table,
                                               const ClusterOptions& options = {});

/// Cluster-popping driven by a dynamic Tarjan DFS. With the same table it
/// resamples exactly the same variables as the naive variant and returns
/// the same subset.
Sampled<ArcSubset> sample_root_connected_tarjan(const DirectedGraph& d, Vertex root,
                                                ResamplingTable& table,
                                                const ClusterOptions& options = {});

}  // namespace prs
