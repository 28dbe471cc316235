#include <doctest.h>

#include <cmath>
#include <fstream>

#include "prs/graph_io.hpp"

using namespace prs;

TEST_CASE("plain edge list") {
    const auto f = parse_graph_string("# triangle\n3 3\n0 1 0.5\n1 2 0.25\n0 2 0.5\n");
    CHECK(f.graph.n() == 3);
    CHECK(f.graph.m() == 3);
    CHECK(f.graph.value(1) == 0.25);
    CHECK_FALSE(f.root.has_value());
}

TEST_CASE("edge list without values") {
    const auto f = parse_graph_string("2 1\n0 1\n");
    CHECK(std::isnan(f.graph.value(0)));
    CHECK_THROWS_AS(f.graph.require_weights(), InvalidInput);
}

TEST_CASE("structured format") {
    const auto f = parse_graph_string(R"({"n": 3, "edges": [[0,1,0.5],[1,2,0.5]], "root": 2})");
    CHECK(f.graph.n() == 3);
    CHECK(f.graph.m() == 2);
    REQUIRE(f.root.has_value());
    CHECK(*f.root == 2);
}

TEST_CASE("round trip through the edge list writer") {
    const UndirectedGraph g(4, {{0, 1, 0.5}, {1, 2, 2.0}, {2, 3, 0.125}});
    const auto back = parse_graph_string(to_edge_list(g)).graph;
    REQUIRE(back.m() == g.m());
    for (EdgeId e = 0; e < g.m(); ++e) {
        CHECK(back.edge(e).u == g.edge(e).u);
        CHECK(back.edge(e).v == g.edge(e).v);
        CHECK(back.value(e) == g.value(e));
    }
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_graph_string("3 2\n0 1 0.5\n"), InvalidInput);
    CHECK_THROWS_AS(parse_graph_string("2 1\n0 5 0.5\n"), InvalidInput);
    CHECK_THROWS_AS(parse_graph_string("x y\n"), InvalidInput);
    CHECK_THROWS_AS(parse_graph_string(R"({"n": 2, "edges": [[0]]})"), InvalidInput);
    CHECK_THROWS_AS(parse_graph_string("{ not json"), InvalidInput);
    CHECK_THROWS_AS(load_graph("/nonexistent/graph.txt"), InvalidInput);
}
