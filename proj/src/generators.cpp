#include "prs/generators.hpp"

#include <utility>

namespace prs {

namespace {

using Edges = std::vector<UndirectedGraph::Edge>;

void add_clique(Edges& edges, Vertex first, std::size_t size, double value) {
    for (Vertex u = first; u < first + size; ++u)
        for (Vertex v = u + 1; v < first + size; ++v) edges.push_back({u, v, value});
}

}  // namespace

UndirectedGraph path_graph(std::size_t n, double value) {
    if (n < 1) throw InvalidInput("path needs n >= 1");
    Edges edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, value});
    return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph cycle_graph(std::size_t n, double value) {
    if (n < 3) throw InvalidInput("cycle needs n >= 3");
    Edges edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, value});
    edges.push_back({n - 1, 0, value});
    return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph complete_graph(std::size_t n, double value) {
    if (n < 1) throw InvalidInput("complete graph needs n >= 1");
    Edges edges;
    add_clique(edges, 0, n, value);
    return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph lollipop(std::size_t path_len, std::size_t clique_size, double path_value,
                         double clique_value) {
    if (path_len < 1 || clique_size < 3) throw InvalidInput("lollipop needs n1 >= 1, n2 >= 3");
    Edges edges;
    for (Vertex i = 0; i < path_len; ++i) edges.push_back({i, i + 1, path_value});
    add_clique(edges, path_len, clique_size, clique_value);
    return UndirectedGraph(path_len + clique_size, std::move(edges));
}

UndirectedGraph barbell(std::size_t path_len, std::size_t clique_size, double value) {
    if (path_len < 1 || clique_size < 3) throw InvalidInput("barbell needs n1 >= 1, n2 >= 3");
    Edges edges;
    add_clique(edges, 0, clique_size, value);
    const Vertex second = clique_size + path_len - 1;
    Vertex prev = clique_size - 1;
    for (Vertex next = clique_size; next <= second; ++next) {
        edges.push_back({prev, next, value});
        prev = next;
    }
    add_clique(edges, second, clique_size, value);
    return UndirectedGraph(second + clique_size, std::move(edges));
}

}  // namespace prs

#include <algorithm>
#include <numeric>
#include <set>

namespace prs {

UndirectedGraph random_connected_graph(std::size_t n, double extra_edge_prob, std::mt19937_64& rng,
                                       double value_lo, double value_hi) {
    if (n < 1) throw InvalidInput("random graph needs n >= 1");
    std::uniform_real_distribution<double> value(value_lo, value_hi);
    std::bernoulli_distribution extra(extra_edge_prob);
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> parent(0, v - 1);
        pairs.emplace(parent(rng), v);
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!pairs.contains({u, v}) && extra(rng)) pairs.emplace(u, v);
    Edges edges;
    for (const auto& [u, v] : pairs) edges.push_back({u, v, value_lo == value_hi ? value_lo : value(rng)});
    return UndirectedGraph(n, std::move(edges));
}

std::vector<UndirectedGraph> connected_graphs(std::size_t n, double value) {
    if (n < 1 || n > 6) throw InvalidInput("graph enumeration supports 1 <= n <= 6");
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<std::vector<Vertex>> perms;
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<std::size_t> slot_of(n * n, 0);
    for (std::size_t i = 0; i < slots.size(); ++i) {
        slot_of[slots[i].first * n + slots[i].second] = i;
        slot_of[slots[i].second * n + slots[i].first] = i;
    }

    std::set<std::uint64_t> seen;
    std::vector<std::pair<std::size_t, std::uint64_t>> reps;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        // Canonical form: smallest relabelled mask.
        std::uint64_t canon = mask;
        for (const auto& p : perms) {
            std::uint64_t image = 0;
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (mask >> i & 1) image |= std::uint64_t{1} << slot_of[p[slots[i].first] * n + p[slots[i].second]];
            canon = std::min(canon, image);
        }
        if (!seen.insert(canon).second) continue;
        Edges edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (canon >> i & 1) edges.push_back({slots[i].first, slots[i].second, value});
        UndirectedGraph g(n, std::move(edges));
        if (is_connected(g)) reps.emplace_back(g.m(), canon);
    }
    std::sort(reps.begin(), reps.end());
    std::vector<UndirectedGraph> out;
    for (const auto& [m, canon] : reps) {
        Edges edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (canon >> i & 1) edges.push_back({slots[i].first, slots[i].second, value});
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

}  // namespace prs
