#include "prs/sink_popping.hpp"

#include <numeric>

namespace prs {

std::vector<Vertex> find_sinks(const UndirectedGraph& g, const Orientation& o) {
    std::vector<char> has_out(g.n(), 0);
    for (EdgeId e = 0; e < g.m(); ++e) has_out[edge_tail(g, o, e)] = 1;
    std::vector<Vertex> sinks;
    for (Vertex v = 0; v < g.n(); ++v)
        if (!has_out[v]) sinks.push_back(v);
    return sinks;
}

SinkInstance::SinkInstance(const UndirectedGraph& g, std::vector<EdgeId> edges,
                           std::vector<Vertex> vertices)
    : g_(&g), edges_(std::move(edges)), vertices_(std::move(vertices)), local_(g.m(), 0),
      state_(g.m(), false) {
    if (edges_.empty() && vertices_.empty()) {
        edges_.resize(g.m());
        std::iota(edges_.begin(), edges_.end(), EdgeId{0});
        vertices_.resize(g.n());
        std::iota(vertices_.begin(), vertices_.end(), Vertex{0});
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) local_[edges_[i]] = i;
}

void SinkInstance::occurring_events(std::vector<BadEvent>& events) const {
    for (Vertex v : vertices_) {
        bool sink = true;
        for (EdgeId e : g_->incident(v)) {
            if (edge_tail(*g_, state_, e) == v) {
                sink = false;
                break;
            }
        }
        if (!sink) continue;
        BadEvent event{v, {}};
        for (EdgeId e : g_->incident(v)) event.vbl.push_back(local_[e]);
        events.push_back(std::move(event));
    }
}

void SinkInstance::export_state(Orientation& out) const {
    for (EdgeId e : edges_) out[e] = state_[e];
}

Sampled<Orientation> sample_sink_free(const UndirectedGraph& g, ResamplingTable& table,
                                      const PrsOptions& options) {
    if (has_tree_component(g))
        throw InvalidInput("a connected component is a tree; no sink-free orientation exists");
    const auto comp = connected_components(g);
    const std::size_t parts = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::vector<Vertex>> vertices(parts);
    std::vector<std::vector<EdgeId>> edges(parts);
    for (Vertex v = 0; v < g.n(); ++v) vertices[comp[v]].push_back(v);
    for (EdgeId e = 0; e < g.m(); ++e) edges[comp[g.edge(e).u]].push_back(e);

    Sampled<Orientation> result{Orientation(g.m(), false), {}};
    result.stats.per_variable_resamples.assign(g.m(), 0);
    PrsOptions part_options = options;
    for (std::size_t c = 0; c < parts; ++c) {
        SinkInstance instance(g, edges[c], vertices[c]);
        const auto stats = run_prs(instance, table, part_options);
        instance.export_state(result.value);
        result.stats.init_draws += stats.init_draws;
        result.stats.resampled_vars += stats.resampled_vars;
        result.stats.rounds += stats.rounds;
        result.stats.wall_time += stats.wall_time;
        for (std::size_t i = 0; i < stats.per_variable_resamples.size(); ++i)
            result.stats.per_variable_resamples[instance.edge_of(i)] += stats.per_variable_resamples[i];
        part_options.max_draws -= std::min(part_options.max_draws, stats.total_draws());
    }
    return result;
}

}  // namespace prs
