#include "prs/graph_io.hpp"

#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace prs {

namespace {

constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

GraphFile parse_structured(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed graph object: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw InvalidInput("graph object needs fields 'n' and 'edges'");
    try {
        const auto n = doc.at("n").get<std::size_t>();
        std::vector<UndirectedGraph::Edge> edges;
        for (const auto& row : doc.at("edges")) {
            if (!row.is_array() || row.size() < 2 || row.size() > 3)
                throw InvalidInput("each edge must be [u, v] or [u, v, value]");
            edges.push_back({row[0].get<Vertex>(), row[1].get<Vertex>(),
                             row.size() == 3 ? row[2].get<double>() : kMissing});
        }
        std::optional<Vertex> root;
        if (doc.contains("root") && !doc["root"].is_null()) root = doc["root"].get<Vertex>();
        if (root && *root >= n) throw InvalidInput("root out of range");
        return {UndirectedGraph(n, std::move(edges)), root};
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed graph object: ") + e.what());
    }
}

GraphFile parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            const auto pos = line.find_first_not_of(" \t\r");
            if (pos != std::string::npos && line[pos] != '#') return true;
        }
        return false;
    };
    if (!next_line()) throw InvalidInput("empty graph file");
    std::size_t n = 0, m = 0;
    {
        std::istringstream header(line);
        if (!(header >> n >> m)) throw InvalidInput("edge list header must be 'n m'");
    }
    std::vector<UndirectedGraph::Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!next_line()) throw InvalidInput("edge list ends before m edges");
        std::istringstream row(line);
        long long u = -1, v = -1;
        if (!(row >> u >> v) || u < 0 || v < 0) throw InvalidInput("bad edge line: " + line);
        double value = kMissing;
        if (!(row >> value)) value = kMissing;
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), value});
    }
    if (next_line()) throw InvalidInput("edge list has more lines than m");
    return {UndirectedGraph(n, std::move(edges)), std::nullopt};
}

}  // namespace

GraphFile parse_graph_string(const std::string& text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) throw InvalidInput("empty graph file");
    return text[pos] == '{' ? parse_structured(text) : parse_edge_list(text);
}

GraphFile parse_graph(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_graph_string(text);
}

GraphFile load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open graph file: " + path);
    return parse_graph(in);
}

std::string to_edge_list(const UndirectedGraph& g) {
    std::ostringstream out;
    out.precision(17);
    out << g.n() << ' ' << g.m() << '\n';
    for (const auto& e : g.edges()) {
        out << e.u << ' ' << e.v;
        if (!std::isnan(e.value)) out << ' ' << e.value;
        out << '\n';
    }
    return out.str();
}

}  // namespace prs
