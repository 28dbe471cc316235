#pragma once

#include <vector>

#include "prs/cluster_popping.hpp"
#include "prs/graph.hpp"
#include "prs/prs.hpp"

namespace prs {

/// One arrow per non-root vertex, stored as a position in the vertex's
/// incidence list. The root's slot is unused.
struct ArrowAssignment {
    Vertex root = 0;
    std::vector<std::size_t> choice;

    Vertex target(const UndirectedGraph& g, Vertex v) const {
        return g.other(g.incident(v)[choice[v]], v);
    }
    /// Successor per vertex; the root maps to itself.
    std::vector<Vertex> successors(const UndirectedGraph& g) const;

    bool operator==(const ArrowAssignment&) const = default;
};

/// Cumulative incident-edge weights per vertex, for arrow draws.
class ArrowSampler {
public:
    explicit ArrowSampler(const UndirectedGraph& g);

    /// Position chosen with probability proportional to the incident edge
    /// weight, using one uniform `u`.
    std::size_t pick(Vertex v, double u) const;

private:
    std::vector<std::vector<double>> cumulative_;
};

/// Draws an arrow for `v` from table variable `v`; returns the neighbour.
/// Throws InvalidInput for isolated vertices.
Vertex draw_arrow(const UndirectedGraph& g, Vertex v, ResamplingTable& table);

/// Directed cycles of a functional graph given as successor per vertex
/// (the root is a fixed point and never part of a cycle). Each cycle starts
/// at its smallest vertex; cycles are ordered by that vertex.
std::vector<std::vector<Vertex>> find_cycles(const std::vector<Vertex>& successor, Vertex root);

/// Cycle-popping as a PRS instance. Variable i is the arrow of the i-th
/// non-root vertex; it reads table variable equal to that vertex.
class CycleInstance {
public:
    CycleInstance(const UndirectedGraph& g, Vertex root);

    std::size_t variable_count() const { return vertices_.size(); }
    void draw(std::size_t var, ResamplingTable& table);
    void occurring_events(std::vector<BadEvent>& events) const;

    const ArrowAssignment& state() const { return state_; }
    Vertex vertex_of(std::size_t var) const { return vertices_[var]; }

private:
    const UndirectedGraph* g_;
    ArrowSampler sampler_;
    std::vector<Vertex> vertices_;
    std::vector<std::size_t> variable_of_;
    ArrowAssignment state_;
};

/// Samples a spanning tree oriented toward `root` with probability
/// proportional to the product of its edge weights. Per-variable stats
/// follow CycleInstance's variable order (non-root vertices ascending).
Sampled<ArrowAssignment> sample_spanning_tree(const UndirectedGraph& g, Vertex root,
                                              ResamplingTable& table, const PrsOptions& options = {});

/// True iff every vertex reaches the root by following arrows.
bool is_spanning_tree(const UndirectedGraph& g, const ArrowAssignment& arrows);

}  // namespace prs
