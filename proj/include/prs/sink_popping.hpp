#pragma once

#include <algorithm>
#include <vector>

#include "prs/cluster_popping.hpp"
#include "prs/graph.hpp"
#include "prs/prs.hpp"

namespace prs {

/// Bit per edge: false points from the lower-index endpoint to the higher,
/// true the other way.
using Orientation = std::vector<bool>;

inline Vertex edge_tail(const UndirectedGraph& g, const Orientation& o, EdgeId e) {
    const auto& edge = g.edge(e);
    const Vertex lo = std::min(edge.u, edge.v), hi = std::max(edge.u, edge.v);
    return o[e] ? hi : lo;
}

/// Vertices with no outgoing edge under `o`, ascending.
std::vector<Vertex> find_sinks(const UndirectedGraph& g, const Orientation& o);

/// Sink-popping on the edges `edges` of one part of `g` (all of them when
/// empty). Variable i is edge edges[i]; it reads table variable edges[i].
class SinkInstance {
public:
    SinkInstance(const UndirectedGraph& g, std::vector<EdgeId> edges, std::vector<Vertex> vertices);

    std::size_t variable_count() const { return edges_.size(); }
    void draw(std::size_t var, ResamplingTable& table) {
        state_[edges_[var]] = table.draw(edges_[var]).coin();
    }
    void occurring_events(std::vector<BadEvent>& events) const;

    const Orientation& state() const { return state_; }
    /// Writes this part's edge bits into `out`.
    void export_state(Orientation& out) const;
    EdgeId edge_of(std::size_t var) const { return edges_[var]; }

private:
    const UndirectedGraph* g_;
    std::vector<EdgeId> edges_;
    std::vector<Vertex> vertices_;
    std::vector<std::size_t> local_;
    Orientation state_;
};

/// Uniform sink-free orientation. Components run one after another, each
/// on its own edges' table streams, and their stats are summed; stats are
/// indexed by edge. Throws InvalidInput when a component is a tree.
Sampled<Orientation> sample_sink_free(const UndirectedGraph& g, ResamplingTable& table,
                                      const PrsOptions& options = {});

}  // namespace prs
