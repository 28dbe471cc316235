#include "prs/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <utility>

namespace prs {

namespace {

void build_csr(std::size_t n, std::size_t count, auto key_of, std::vector<std::size_t>& offsets,
               std::vector<std::size_t>& items) {
    offsets.assign(n + 1, 0);
    for (std::size_t i = 0; i < count; ++i) ++offsets[key_of(i) + 1];
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    items.assign(count, 0);
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (std::size_t i = 0; i < count; ++i) items[fill[key_of(i)]++] = i;
}

}  // namespace

UndirectedGraph::UndirectedGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ == 0) throw InvalidInput("graph must have at least one vertex");
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const auto& e : edges_) {
        if (e.u >= n_ || e.v >= n_) throw InvalidInput("edge endpoint out of range");
        if (e.u == e.v) throw InvalidInput("self-loops are not supported");
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
            throw InvalidInput("parallel edges are not supported");
    }
    // Each edge appears in two incidence lists; index 2e and 2e+1 encode the sides.
    std::vector<std::size_t> sides;
    build_csr(
        n_, 2 * edges_.size(),
        [&](std::size_t i) { return i % 2 == 0 ? edges_[i / 2].u : edges_[i / 2].v; }, offsets_,
        sides);
    incident_.resize(sides.size());
    std::transform(sides.begin(), sides.end(), incident_.begin(),
                   [](std::size_t s) { return s / 2; });
}

std::span<const EdgeId> UndirectedGraph::incident(Vertex v) const {
    return std::span<const EdgeId>(incident_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

void UndirectedGraph::require_probabilities() const {
    for (const auto& e : edges_)
        if (!(e.value > 0.0 && e.value < 1.0))
            throw InvalidInput("edge failure probabilities must lie in (0, 1)");
}

void UndirectedGraph::require_weights() const {
    for (const auto& e : edges_)
        if (!(std::isfinite(e.value) && e.value > 0.0))
            throw InvalidInput("edge weights must be positive");
}

double UndirectedGraph::max_value() const {
    double best = 0.0;
    for (const auto& e : edges_) best = std::max(best, e.value);
    return best;
}

double UndirectedGraph::min_value() const {
    if (edges_.empty()) return 0.0;
    double best = edges_.front().value;
    for (const auto& e : edges_) best = std::min(best, e.value);
    return best;
}

UndirectedGraph UndirectedGraph::with_values(std::span<const double> values) const {
    if (values.size() != edges_.size()) throw InvalidInput("value count differs from edge count");
    auto edges = edges_;
    for (std::size_t i = 0; i < edges.size(); ++i) edges[i].value = values[i];
    return UndirectedGraph(n_, std::move(edges));
}

UndirectedGraph UndirectedGraph::with_uniform_value(double value) const {
    std::vector<double> values(edges_.size(), value);
    return with_values(values);
}

DirectedGraph::DirectedGraph(std::size_t n, std::vector<Arc> arcs,
                             std::optional<std::vector<ArcId>> twin)
    : n_(n), arcs_(std::move(arcs)), twin_(std::move(twin)) {
    if (n_ == 0) throw InvalidInput("graph must have at least one vertex");
    for (const auto& a : arcs_) {
        if (a.tail >= n_ || a.head >= n_) throw InvalidInput("arc endpoint out of range");
        if (a.tail == a.head) throw InvalidInput("self-loops are not supported");
        // Zero is allowed: an arc that never fails.
        if (!(a.fail_prob >= 0.0 && a.fail_prob < 1.0))
            throw InvalidInput("arc failure probabilities must lie in [0, 1)");
    }
    if (twin_) {
        const auto& t = *twin_;
        if (t.size() != arcs_.size()) throw InvalidInput("twin map size differs from arc count");
        for (ArcId a = 0; a < t.size(); ++a) {
            if (t[a] >= t.size() || t[t[a]] != a || arcs_[t[a]].tail != arcs_[a].head ||
                arcs_[t[a]].head != arcs_[a].tail)
                throw InvalidInput("twin map is not an involution onto reversed arcs");
        }
    }
    build_csr(n_, arcs_.size(), [&](std::size_t a) { return arcs_[a].tail; }, out_offsets_, out_);
    build_csr(n_, arcs_.size(), [&](std::size_t a) { return arcs_[a].head; }, in_offsets_, in_);
}

std::span<const ArcId> DirectedGraph::out_arcs(Vertex v) const {
    return std::span<const ArcId>(out_).subspan(out_offsets_[v],
                                                out_offsets_[v + 1] - out_offsets_[v]);
}

std::span<const ArcId> DirectedGraph::in_arcs(Vertex v) const {
    return std::span<const ArcId>(in_).subspan(in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]);
}

ArcId DirectedGraph::twin(ArcId a) const {
    if (!twin_) throw std::logic_error("graph is not bi-directed");
    return (*twin_)[a];
}

double DirectedGraph::max_fail_prob() const {
    double best = 0.0;
    for (const auto& a : arcs_) best = std::max(best, a.fail_prob);
    return best;
}

DirectedGraph DirectedGraph::with_fail_probs(std::vector<double> probs) const {
    if (probs.size() != arcs_.size()) throw InvalidInput("probability count differs from arc count");
    auto arcs = arcs_;
    for (std::size_t i = 0; i < arcs.size(); ++i) arcs[i].fail_prob = probs[i];
    return DirectedGraph(n_, std::move(arcs), twin_);
}

DirectedGraph bidirect(const UndirectedGraph& g) {
    std::vector<DirectedGraph::Arc> arcs;
    std::vector<ArcId> twin;
    arcs.reserve(2 * g.m());
    twin.reserve(2 * g.m());
    for (EdgeId e = 0; e < g.m(); ++e) {
        const auto& edge = g.edge(e);
        arcs.push_back({edge.u, edge.v, edge.value});
        arcs.push_back({edge.v, edge.u, edge.value});
        twin.push_back(2 * e + 1);
        twin.push_back(2 * e);
    }
    return DirectedGraph(g.n(), std::move(arcs), std::move(twin));
}

bool is_root_connected(const DirectedGraph& d, const ArcSubset& s, Vertex root) {
    std::vector<char> seen(d.n(), 0);
    std::vector<Vertex> stack{root};
    seen[root] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (ArcId a : d.in_arcs(x)) {
            const Vertex t = d.tail(a);
            if (s[a] && !seen[t]) {
                seen[t] = 1;
                ++reached;
                stack.push_back(t);
            }
        }
    }
    return reached == d.n();
}

std::vector<std::size_t> connected_components(const UndirectedGraph& g) {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp(g.n(), unset);
    std::size_t next = 0;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (comp[s] != unset) continue;
        std::vector<Vertex> stack{s};
        comp[s] = next;
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(x)) {
                const Vertex y = g.other(e, x);
                if (comp[y] == unset) {
                    comp[y] = next;
                    stack.push_back(y);
                }
            }
        }
        ++next;
    }
    return comp;
}

bool is_connected(const UndirectedGraph& g) {
    const auto comp = connected_components(g);
    return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

bool has_tree_component(const UndirectedGraph& g) {
    const auto comp = connected_components(g);
    const std::size_t k = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::size_t> vertices(k, 0), edges(k, 0);
    for (Vertex v = 0; v < g.n(); ++v) ++vertices[comp[v]];
    for (const auto& e : g.edges()) ++edges[comp[e.u]];
    for (std::size_t c = 0; c < k; ++c)
        if (edges[c] + 1 == vertices[c]) return true;
    return false;
}

ArcSubset arborescence_toward_root(const DirectedGraph& d, Vertex root) {
    if (root >= d.n()) throw InvalidInput("root out of range");
    ArcSubset tree(d.m(), false);
    std::vector<char> seen(d.n(), 0);
    std::deque<Vertex> queue{root};
    seen[root] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        for (ArcId a : d.in_arcs(x)) {
            const Vertex t = d.tail(a);
            if (!seen[t]) {
                seen[t] = 1;
                ++reached;
                tree[a] = true;
                queue.push_back(t);
            }
        }
    }
    if (reached != d.n()) throw InvalidInput("graph is not root-connected");
    return tree;
}

}  // namespace prs
