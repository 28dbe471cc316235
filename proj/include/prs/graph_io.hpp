#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "prs/graph.hpp"

namespace prs {

struct GraphFile {
    UndirectedGraph graph;
    std::optional<Vertex> root;
};

/// Parses either format, chosen by the first non-blank character:
///
///   plain edge list      `n m` then one `u v [value]` line per edge
///   structured object    {"n": 3, "edges": [[0,1,0.5], ...], "root": 0}
///
/// Vertices are 0-based. A missing value column reads as NaN, which the
/// probability and weight checks reject. Throws InvalidInput on malformed text.
GraphFile parse_graph(std::istream& in);
GraphFile parse_graph_string(const std::string& text);
GraphFile load_graph(const std::string& path);

std::string to_edge_list(const UndirectedGraph& g);

}  // namespace prs
