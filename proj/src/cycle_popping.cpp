#include "prs/cycle_popping.hpp"

#include <algorithm>

namespace prs {

std::vector<Vertex> ArrowAssignment::successors(const UndirectedGraph& g) const {
    std::vector<Vertex> next(g.n());
    for (Vertex v = 0; v < g.n(); ++v) next[v] = v == root ? v : target(g, v);
    return next;
}

ArrowSampler::ArrowSampler(const UndirectedGraph& g) : cumulative_(g.n()) {
    for (Vertex v = 0; v < g.n(); ++v) {
        double total = 0.0;
        for (EdgeId e : g.incident(v)) {
            total += g.value(e);
            cumulative_[v].push_back(total);
        }
    }
}

std::size_t ArrowSampler::pick(Vertex v, double u) const {
    const auto& cum = cumulative_[v];
    if (cum.empty()) throw InvalidInput("isolated vertex has no arrow to draw");
    const double target = u * cum.back();
    for (std::size_t i = 0; i + 1 < cum.size(); ++i)
        if (target < cum[i]) return i;
    return cum.size() - 1;
}

Vertex draw_arrow(const UndirectedGraph& g, Vertex v, ResamplingTable& table) {
    if (g.degree(v) == 0) throw InvalidInput("isolated vertex has no arrow to draw");
    const ArrowSampler sampler(g);
    const std::size_t pos = sampler.pick(v, table.draw(v).uniform());
    return g.other(g.incident(v)[pos], v);
}

std::vector<std::vector<Vertex>> find_cycles(const std::vector<Vertex>& successor, Vertex root) {
    enum : char { white, grey, black };
    const std::size_t n = successor.size();
    std::vector<char> color(n, white);
    color[root] = black;
    std::vector<std::vector<Vertex>> cycles;
    std::vector<Vertex> trail;
    for (Vertex s = 0; s < n; ++s) {
        if (color[s] != white) continue;
        trail.clear();
        Vertex x = s;
        while (color[x] == white) {
            color[x] = grey;
            trail.push_back(x);
            x = successor[x];
        }
        if (color[x] == grey) {
            // x closes a new cycle; it starts at its smallest vertex.
            auto first = std::find(trail.begin(), trail.end(), x);
            std::vector<Vertex> cycle(first, trail.end());
            std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
            cycles.push_back(std::move(cycle));
        }
        for (Vertex t : trail) color[t] = black;
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return cycles;
}

CycleInstance::CycleInstance(const UndirectedGraph& g, Vertex root)
    : g_(&g), sampler_(g), variable_of_(g.n(), 0) {
    state_.root = root;
    state_.choice.assign(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (v == root) continue;
        variable_of_[v] = vertices_.size();
        vertices_.push_back(v);
    }
}

void CycleInstance::draw(std::size_t var, ResamplingTable& table) {
    const Vertex v = vertices_[var];
    state_.choice[v] = sampler_.pick(v, table.draw(v).uniform());
}

void CycleInstance::occurring_events(std::vector<BadEvent>& events) const {
    const auto cycles = find_cycles(state_.successors(*g_), state_.root);
    for (std::size_t k = 0; k < cycles.size(); ++k) {
        BadEvent event{k, {}};
        for (Vertex v : cycles[k]) event.vbl.push_back(variable_of_[v]);
        events.push_back(std::move(event));
    }
}

Sampled<ArrowAssignment> sample_spanning_tree(const UndirectedGraph& g, Vertex root,
                                              ResamplingTable& table, const PrsOptions& options) {
    if (root >= g.n()) throw InvalidInput("root out of range");
    g.require_weights();
    if (!is_connected(g)) throw InvalidInput("graph is disconnected; no spanning tree exists");
    CycleInstance instance(g, root);
    auto stats = run_prs(instance, table, options);
    return {instance.state(), std::move(stats)};
}

bool is_spanning_tree(const UndirectedGraph& g, const ArrowAssignment& arrows) {
    const auto next = arrows.successors(g);
    for (Vertex v = 0; v < g.n(); ++v) {
        Vertex x = v;
        for (std::size_t steps = 0; x != arrows.root && steps < g.n(); ++steps) x = next[x];
        if (x != arrows.root) return false;
    }
    return true;
}

}  // namespace prs
