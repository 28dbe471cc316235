#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace prs {

using Vertex = std::size_t;
using EdgeId = std::size_t;
using ArcId = std::size_t;

/// Bit per arc (or edge) index; `true` means the arc is present.
using ArcSubset = std::vector<bool>;
using EdgeSubset = std::vector<bool>;

/// Raised for inputs that violate a sampler or estimator precondition
/// (disconnected graph, no root-connected subgraph, tree component, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UndirectedGraph {
public:
    struct Edge {
        Vertex u;
        Vertex v;
        /// Failure probability or weight, depending on how the graph is used.
        double value;
    };

    /// Rejects self-loops, parallel edges and out-of-range endpoints.
    UndirectedGraph(std::size_t n, std::vector<Edge> edges);

    std::size_t n() const { return n_; }
    std::size_t m() const { return edges_.size(); }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }
    double value(EdgeId e) const { return edges_[e].value; }

    /// Incident edge ids of `v`, in increasing edge index order.
    std::span<const EdgeId> incident(Vertex v) const;
    std::size_t degree(Vertex v) const { return incident(v).size(); }
    Vertex other(EdgeId e, Vertex v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

    /// Throws InvalidInput unless every value lies strictly inside (0, 1).
    void require_probabilities() const;
    /// Throws InvalidInput unless every value is finite and positive.
    void require_weights() const;

    double max_value() const;
    double min_value() const;

    UndirectedGraph with_values(std::span<const double> values) const;
    UndirectedGraph with_uniform_value(double value) const;

private:
    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<EdgeId> incident_;
};

class DirectedGraph {
public:
    struct Arc {
        Vertex tail;
        Vertex head;
        double fail_prob;
    };

    /// `twin`, when given, must be an involution pairing u->v with v->u.
    DirectedGraph(std::size_t n, std::vector<Arc> arcs,
                  std::optional<std::vector<ArcId>> twin = std::nullopt);

    std::size_t n() const { return n_; }
    std::size_t m() const { return arcs_.size(); }

    const Arc& arc(ArcId a) const { return arcs_[a]; }
    std::span<const Arc> arcs() const { return arcs_; }
    Vertex tail(ArcId a) const { return arcs_[a].tail; }
    Vertex head(ArcId a) const { return arcs_[a].head; }
    double fail_prob(ArcId a) const { return arcs_[a].fail_prob; }

    std::span<const ArcId> out_arcs(Vertex v) const;
    std::span<const ArcId> in_arcs(Vertex v) const;

    bool is_bidirected() const { return twin_.has_value(); }
    ArcId twin(ArcId a) const;

    double max_fail_prob() const;

    /// Same structure, new per-arc failure probabilities.
    DirectedGraph with_fail_probs(std::vector<double> probs) const;

private:
    std::size_t n_;
    std::vector<Arc> arcs_;
    std::optional<std::vector<ArcId>> twin_;
    std::vector<std::size_t> out_offsets_, in_offsets_;
    std::vector<ArcId> out_, in_;
};

/// Arcs 2i and 2i+1 are u->v and v->u for edge i = {u, v}; both keep the
/// edge value as their failure probability.
DirectedGraph bidirect(const UndirectedGraph& g);

/// True iff every vertex reaches `root` using only arcs in `s`.
bool is_root_connected(const DirectedGraph& d, const ArcSubset& s, Vertex root);

bool is_connected(const UndirectedGraph& g);

/// Connected component id per vertex, ids assigned in order of lowest vertex.
std::vector<std::size_t> connected_components(const UndirectedGraph& g);

/// True iff some connected component has exactly (#vertices - 1) edges.
bool has_tree_component(const UndirectedGraph& g);

/// Spanning in-tree toward `root`: BFS over reversed arcs from the root,
/// scanning in-arcs in index order. Throws InvalidInput when some vertex
/// cannot reach the root.
ArcSubset arborescence_toward_root(const DirectedGraph& d, Vertex root);

}  // namespace prs
