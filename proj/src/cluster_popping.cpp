#include "prs/cluster_popping.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>

namespace prs {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

/// Iterative Tarjan over the arcs of `s`; returns the component id per vertex.
std::vector<std::size_t> scc_ids(const DirectedGraph& d, const ArcSubset& s, std::size_t& count) {
    const std::size_t n = d.n();
    std::vector<std::size_t> index(n, kNone), low(n, 0), comp(n, kNone);
    std::vector<char> on_stack(n, 0);
    std::vector<Vertex> stack;
    struct Frame {
        Vertex v;
        std::size_t pos;
    };
    std::vector<Frame> work;
    std::size_t counter = 0;
    count = 0;
    for (Vertex start = 0; start < n; ++start) {
        if (index[start] != kNone) continue;
        index[start] = low[start] = counter++;
        stack.push_back(start);
        on_stack[start] = 1;
        work.push_back({start, 0});
        while (!work.empty()) {
            const Vertex v = work.back().v;
            const auto out = d.out_arcs(v);
            bool descended = false;
            while (work.back().pos < out.size()) {
                const ArcId a = out[work.back().pos++];
                if (!s[a]) continue;
                const Vertex w = d.head(a);
                if (index[w] == kNone) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    work.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = count;
                } while (w != v);
                ++count;
            }
            work.pop_back();
            if (!work.empty()) {
                const Vertex parent = work.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    return comp;
}

}  // namespace

std::vector<std::vector<Vertex>> find_minimal_clusters(const DirectedGraph& d, const ArcSubset& s,
                                                       Vertex root) {
    std::size_t count = 0;
    const auto comp = scc_ids(d, s, count);
    std::vector<char> is_sink(count, 1);
    for (ArcId a = 0; a < d.m(); ++a)
        if (s[a] && comp[d.tail(a)] != comp[d.head(a)]) is_sink[comp[d.tail(a)]] = 0;
    is_sink[comp[root]] = 0;

    std::vector<std::size_t> slot(count, kNone);
    std::vector<std::vector<Vertex>> clusters;
    for (Vertex v = 0; v < d.n(); ++v) {
        const std::size_t c = comp[v];
        if (!is_sink[c]) continue;
        if (slot[c] == kNone) {
            slot[c] = clusters.size();
            clusters.emplace_back();
        }
        clusters[slot[c]].push_back(v);
    }
    return clusters;
}

void require_root_connected(const DirectedGraph& d, Vertex root) {
    if (root >= d.n()) throw InvalidInput("root out of range");
    if (!is_root_connected(d, ArcSubset(d.m(), true), root))
        throw InvalidInput("graph is not root-connected; no root-connected subgraph exists");
}

ClusterInstance::ClusterInstance(const DirectedGraph& d, Vertex root)
    : d_(&d), root_(root), state_(d.m(), false) {}

void ClusterInstance::occurring_events(std::vector<BadEvent>& events) const {
    const auto clusters = find_minimal_clusters(*d_, state_, root_);
    for (std::size_t k = 0; k < clusters.size(); ++k) {
        BadEvent event{k, {}};
        for (Vertex v : clusters[k])
            for (ArcId a : d_->out_arcs(v)) event.vbl.push_back(a);
        events.push_back(std::move(event));
    }
}

Sampled<ArcSubset> sample_root_connected_naive(const DirectedGraph& d, Vertex root,
                                               ResamplingTable& table,
                                               const ClusterOptions& options) {
    require_root_connected(d, root);
    ClusterInstance instance(d, root);
    auto stats = run_prs(instance, table, {options.extremality_check, options.max_draws});
    return {instance.state(), std::move(stats)};
}

namespace {

/// Dynamic Tarjan state. Index and root values are 1-based with 0 meaning
/// undefined; `counter - 1` is the number of indexed vertices.
class TarjanPopper {
public:
    TarjanPopper(const DirectedGraph& d, Vertex root, ResamplingTable& table,
                 const ClusterOptions& options)
        : d_(d), root_(root), table_(table), options_(options), arcs_(d.m(), false),
          index_(d.n(), 0), low_(d.n(), 0), settled_(d.n(), 0) {
        stats_.per_variable_resamples.assign(d.m(), 0);
    }

    Sampled<ArcSubset> run() {
        const auto start = std::chrono::steady_clock::now();
        for (ArcId a = 0; a < d_.m(); ++a) arcs_[a] = draw_arc(d_, a, table_);
        stats_.init_draws = d_.m();

        index_[root_] = low_[root_] = 1;
        counter_ = 2;
        stack_.push_back(root_);
        for (Vertex v = 0; v < d_.n(); ++v) {
            if (options_.verify_pops) check_top_level();
            if (index_[v] == 0) dynamic_dfs(v);
        }
        if (options_.verify_pops) check_top_level();
        stats_.wall_time =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return {std::move(arcs_), std::move(stats_)};
    }

private:
    struct Frame {
        Vertex v;
        std::size_t pos;
        Vertex child;
    };

    void enter(Vertex v) {
        index_[v] = low_[v] = counter_++;
        stack_.push_back(v);
        work_.push_back({v, 0, kNone});
    }

    void dynamic_dfs(Vertex start) {
        enter(start);
        while (!work_.empty()) {
            const std::size_t top = work_.size() - 1;
            const Vertex v = work_[top].v;
            if (work_[top].child != kNone) {
                low_[v] = std::min(low_[v], low_[work_[top].child]);
                work_[top].child = kNone;
            }
            const auto out = d_.out_arcs(v);
            bool descended = false;
            while (work_[top].pos < out.size()) {
                const ArcId a = out[work_[top].pos++];
                if (!arcs_[a]) continue;
                const Vertex w = d_.head(a);
                if (index_[w] == 0) {
                    work_[top].child = w;
                    enter(w);
                    descended = true;
                    break;
                }
                low_[v] = std::min(low_[v], index_[w]);
            }
            if (descended) continue;

            if (low_[v] == index_[v]) {
                // A minimal cluster is found: everything stacked from v upward.
                pop_and_resample(v);
                index_[v] = low_[v] = counter_++;
                stack_.push_back(v);
                work_[top].pos = 0;
                work_[top].child = kNone;
            } else {
                work_.pop_back();
            }
        }
    }

    void pop_and_resample(Vertex v) {
        popped_.clear();
        Vertex w;
        do {
            w = stack_.back();
            stack_.pop_back();
            popped_.push_back(w);
            index_[w] = low_[w] = 0;
            --counter_;
        } while (w != v);

        if (options_.verify_pops) verify_popped();

        batch_.clear();
        for (Vertex x : popped_)
            for (ArcId a : d_.out_arcs(x)) batch_.push_back(a);
        std::sort(batch_.begin(), batch_.end());
        if (stats_.total_draws() + batch_.size() > options_.max_draws)
            throw RoundCapExceeded("draw budget exhausted before reaching a root-connected subgraph");
        for (ArcId a : batch_) {
            arcs_[a] = draw_arc(d_, a, table_);
            ++stats_.per_variable_resamples[a];
        }
        stats_.resampled_vars += batch_.size();
        ++stats_.rounds;
    }

    void verify_popped() {
        auto set = popped_;
        std::sort(set.begin(), set.end());
        for (Vertex x : set)
            if (settled_[x]) throw InvariantViolation("a settled vertex was resampled");
        const auto clusters = find_minimal_clusters(d_, arcs_, root_);
        if (std::find(clusters.begin(), clusters.end(), set) == clusters.end())
            throw InvariantViolation("popped vertex set is not a minimal cluster");
    }

    void check_top_level() {
        std::size_t indexed = 0;
        for (Vertex x = 0; x < d_.n(); ++x) {
            if (index_[x] == 0) continue;
            ++indexed;
            settled_[x] = 1;
        }
        if (counter_ - 1 != indexed)
            throw InvariantViolation("index counter out of step with indexed vertices");
        if (!stack_.empty() && stack_.size() != indexed)
            throw InvariantViolation("stack does not hold exactly the indexed vertices");
    }

    const DirectedGraph& d_;
    Vertex root_;
    ResamplingTable& table_;
    ClusterOptions options_;
    ArcSubset arcs_;
    std::vector<std::size_t> index_, low_;
    std::vector<char> settled_;
    std::size_t counter_ = 0;
    std::vector<Vertex> stack_;
    std::vector<Frame> work_;
    std::vector<Vertex> popped_;
    std::vector<ArcId> batch_;
    RunStats stats_;
};

}  // namespace

Sampled<ArcSubset> sample_root_connected_tarjan(const DirectedGraph& d, Vertex root,
                                                ResamplingTable& table,
                                                const ClusterOptions& options) {
    require_root_connected(d, root);
    return TarjanPopper(d, root, table, options).run();
}

}  // namespace prs
