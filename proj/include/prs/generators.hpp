#pragma once

#include "prs/graph.hpp"

namespace prs {

// Every edge carries `value` unless stated otherwise. Vertex and edge orders
// are deterministic.

/// Vertices 0..n-1, edges {i, i+1}.
UndirectedGraph path_graph(std::size_t n, double value = 0.5);

/// n >= 3; edges {i, i+1} and {n-1, 0}.
UndirectedGraph cycle_graph(std::size_t n, double value = 0.5);

/// Edges in lexicographic order of (u, v), u < v.
UndirectedGraph complete_graph(std::size_t n, double value = 0.5);

/// A path with `path_len` edges glued onto a clique of `clique_size` vertices.
/// Vertex 0 is the free path end (the default root), vertex `path_len` is
/// the junction, and the clique occupies vertices path_len..path_len+clique_size-1.
/// Path edges come first, then clique edges.
UndirectedGraph lollipop(std::size_t path_len, std::size_t clique_size, double path_value,
                         double clique_value);
inline UndirectedGraph lollipop(std::size_t path_len, std::size_t clique_size, double value = 0.5) {
    return lollipop(path_len, clique_size, value, value);
}
inline Vertex lollipop_root(std::size_t /*path_len*/, std::size_t /*clique_size*/) { return 0; }
inline Vertex lollipop_junction(std::size_t path_len, std::size_t /*clique_size*/) { return path_len; }

/// Two cliques of `clique_size` vertices joined by a path with `path_len` edges.
/// First clique on 0..k-1; the path runs from k-1 through the intermediate
/// vertices to the first vertex of the second clique.
UndirectedGraph barbell(std::size_t path_len, std::size_t clique_size, double value = 0.5);

}  // namespace prs

#include <random>

namespace prs {

/// Random connected graph: a random recursive tree plus each remaining
/// pair independently with probability `extra_edge_prob`. Edge values are
/// uniform in [value_lo, value_hi].
UndirectedGraph random_connected_graph(std::size_t n, double extra_edge_prob, std::mt19937_64& rng,
                                       double value_lo = 0.5, double value_hi = 0.5);

/// One representative per isomorphism class of connected simple graphs on
/// exactly `n` vertices (n <= 6), edges in lexicographic order, all values
/// set to `value`.
std::vector<UndirectedGraph> connected_graphs(std::size_t n, double value = 0.5);

}  // namespace prs
