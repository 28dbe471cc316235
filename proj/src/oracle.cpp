#include "prs/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>

namespace prs {

namespace {

std::vector<std::size_t> bits_of(std::uint64_t mask) {
    std::vector<std::size_t> out;
    for (; mask; mask &= mask - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    return out;
}

/// Fills the normalized fields from raw event masses keyed by a bitmask.
void finish(ExactSummary& s, const std::map<std::uint64_t, long double>& perfect, long double q_empty,
            long double q_multi, long double total,
            const std::map<std::vector<std::size_t>, std::pair<long double, std::size_t>>& events) {
    if (q_empty <= 0.0L) throw InvalidInput("no perfect assignment exists");
    s.q_empty = static_cast<double>(q_empty);
    s.q_multi = static_cast<double>(q_multi);
    s.total_mass = static_cast<double>(total);
    for (const auto& [key, w] : perfect) s.distribution[key] = static_cast<double>(w / q_empty);
    long double expected = 0.0L;
    for (const auto& [key, entry] : events) {
        s.events.push_back({key, static_cast<double>(entry.first), entry.second});
        expected += entry.first * entry.second / q_empty;
    }
    s.expected_resampled = static_cast<double>(expected);
}

}  // namespace

std::uint64_t outcome_key(const std::vector<bool>& bits) {
    if (bits.size() > 64) throw InvalidInput("outcome too large for a 64-bit key");
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) key |= std::uint64_t{1} << i;
    return key;
}

std::uint64_t outcome_key(const UndirectedGraph& g, const ArrowAssignment& arrows) {
    std::uint64_t key = 0, radix = 1;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (v == arrows.root) continue;
        key += arrows.choice[v] * radix;
        radix *= g.degree(v);
    }
    return key;
}

ExactSummary exact_cluster_summary(const DirectedGraph& d, Vertex root) {
    const std::size_t n = d.n(), m = d.m();
    if (m > 24 || n > 64) throw InvalidInput("instance too large for enumeration");
    if (root >= n) throw InvalidInput("root out of range");

    std::map<std::uint64_t, long double> perfect;
    std::map<std::vector<std::size_t>, std::pair<long double, std::size_t>> events;
    std::map<std::uint64_t, long double> cluster_mass;
    long double q_empty = 0, q_multi = 0, total = 0;
    std::vector<std::uint64_t> out(n), closure(n);
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    ExactSummary s;
    s.assignments = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < s.assignments; ++mask) {
        long double w = 1.0L;
        std::fill(out.begin(), out.end(), 0);
        for (ArcId a = 0; a < m; ++a) {
            const long double p = d.fail_prob(a);
            if (mask >> a & 1) {
                w *= 1.0L - p;
                out[d.tail(a)] |= std::uint64_t{1} << d.head(a);
            } else {
                w *= p;
            }
        }
        total += w;

        // Vertices that reach the root.
        std::uint64_t reach = std::uint64_t{1} << root;
        for (bool grew = true; grew;) {
            grew = false;
            for (Vertex v = 0; v < n; ++v)
                if (!(reach >> v & 1) && (out[v] & reach)) {
                    reach |= std::uint64_t{1} << v;
                    grew = true;
                }
        }
        if (reach == all) {
            q_empty += w;
            perfect[mask] += w;
            continue;
        }

        // Forward closure of each vertex. A minimal cluster is a closure that
        // equals the closure of each of its members.
        for (Vertex v = 0; v < n; ++v) {
            std::uint64_t c = std::uint64_t{1} << v;
            for (;;) {
                std::uint64_t next = c;
                for (std::size_t u : bits_of(c)) next |= out[u];
                if (next == c) break;
                c = next;
            }
            closure[v] = c;
        }
        std::vector<std::uint64_t> minimal;
        for (Vertex v = 0; v < n; ++v) {
            if (reach >> v & 1) continue;
            const std::uint64_t c = closure[v];
            bool is_minimal = true;
            for (std::size_t u : bits_of(c)) is_minimal &= closure[u] == c;
            if (is_minimal && std::find(minimal.begin(), minimal.end(), c) == minimal.end())
                minimal.push_back(c);
        }
        if (minimal.size() != 1) {
            q_multi += w;
            continue;
        }
        cluster_mass[minimal.front()] += w;
    }

    s.expected_per_variable.assign(m, 0.0);
    for (const auto& [c, q] : cluster_mass) {
        auto key = bits_of(c);
        std::size_t vbl = 0;
        for (Vertex v : key) vbl += d.out_arcs(v).size();
        events[key] = {q, vbl};
        for (Vertex v : key)
            for (ArcId a : d.out_arcs(v)) s.expected_per_variable[a] += static_cast<double>(q / q_empty);
    }
    finish(s, perfect, q_empty, q_multi, total, events);
    return s;
}

ExactSummary exact_cycle_summary(const UndirectedGraph& g, Vertex root) {
    const std::size_t n = g.n();
    if (root >= n) throw InvalidInput("root out of range");
    g.require_weights();
    std::vector<Vertex> vars;
    std::uint64_t space = 1;
    for (Vertex v = 0; v < n; ++v) {
        if (v == root) continue;
        if (g.degree(v) == 0) throw InvalidInput("isolated vertex");
        vars.push_back(v);
        space *= g.degree(v);
        if (space > kMaxArrowAssignments) throw InvalidInput("instance too large for enumeration");
    }
    std::vector<long double> total_weight(n, 0.0L);
    for (Vertex v = 0; v < n; ++v)
        for (EdgeId e : g.incident(v)) total_weight[v] += g.value(e);

    std::map<std::uint64_t, long double> perfect;
    std::map<std::vector<std::size_t>, std::pair<long double, std::size_t>> events;
    long double q_empty = 0, q_multi = 0, total = 0;
    std::vector<std::size_t> digit(vars.size(), 0);
    std::vector<Vertex> next(n);
    std::vector<std::size_t> var_index(n, 0);
    for (std::size_t i = 0; i < vars.size(); ++i) var_index[vars[i]] = i;

    ExactSummary s;
    s.assignments = space;
    s.expected_per_variable.assign(vars.size(), 0.0);
    std::map<std::vector<std::size_t>, long double> cycle_mass;
    for (std::uint64_t key = 0; key < space; ++key) {
        long double w = 1.0L;
        next[root] = root;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const Vertex v = vars[i];
            const EdgeId e = g.incident(v)[digit[i]];
            next[v] = g.other(e, v);
            w *= g.value(e) / total_weight[v];
        }
        total += w;

        // A vertex lies on a cycle iff following arrows brings it back.
        std::vector<std::vector<std::size_t>> cycles;
        for (Vertex v : vars) {
            Vertex x = next[v];
            std::size_t steps = 1;
            while (x != v && x != root && steps <= n) {
                x = next[x];
                ++steps;
            }
            if (x != v) continue;
            std::vector<std::size_t> cycle{v};
            for (Vertex y = next[v]; y != v; y = next[y]) cycle.push_back(y);
            std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
            if (std::find(cycles.begin(), cycles.end(), cycle) == cycles.end()) cycles.push_back(cycle);
        }
        if (cycles.empty()) {
            q_empty += w;
            perfect[key] += w;
        } else if (cycles.size() == 1) {
            cycle_mass[cycles.front()] += w;
        } else {
            q_multi += w;
        }

        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (++digit[i] < g.degree(vars[i])) break;
            digit[i] = 0;
        }
    }
    for (const auto& [cycle, q] : cycle_mass) {
        events[cycle] = {q, cycle.size()};
        for (Vertex v : cycle) s.expected_per_variable[var_index[v]] += static_cast<double>(q / q_empty);
    }
    finish(s, perfect, q_empty, q_multi, total, events);
    return s;
}

ExactSummary exact_sink_summary(const UndirectedGraph& g) {
    const std::size_t n = g.n(), m = g.m();
    if (m > 24) throw InvalidInput("instance too large for enumeration");
    std::map<std::uint64_t, long double> perfect;
    std::map<std::vector<std::size_t>, std::pair<long double, std::size_t>> events;
    std::map<Vertex, long double> sink_mass;
    long double q_empty = 0, q_multi = 0, total = 0;
    const long double w = std::ldexp(1.0L, -static_cast<int>(m));
    std::vector<std::size_t> outdeg(n);

    ExactSummary s;
    s.assignments = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < s.assignments; ++mask) {
        std::fill(outdeg.begin(), outdeg.end(), 0);
        for (EdgeId e = 0; e < m; ++e) {
            const Vertex lo = std::min(g.edge(e).u, g.edge(e).v);
            const Vertex hi = std::max(g.edge(e).u, g.edge(e).v);
            ++outdeg[(mask >> e & 1) ? hi : lo];
        }
        total += w;
        std::size_t sinks = 0;
        Vertex last = 0;
        for (Vertex v = 0; v < n; ++v)
            if (outdeg[v] == 0) {
                ++sinks;
                last = v;
            }
        if (sinks == 0) {
            q_empty += w;
            perfect[mask] += w;
        } else if (sinks == 1) {
            sink_mass[last] += w;
        } else {
            q_multi += w;
        }
    }
    s.expected_per_variable.assign(m, 0.0);
    for (const auto& [v, q] : sink_mass) {
        events[{v}] = {q, g.degree(v)};
        for (EdgeId e : g.incident(v)) s.expected_per_variable[e] += static_cast<double>(q / q_empty);
    }
    finish(s, perfect, q_empty, q_multi, total, events);
    return s;
}

std::map<std::uint64_t, double> exact_distribution(SamplerKind kind, const UndirectedGraph& g,
                                                   Vertex root) {
    switch (kind) {
        case SamplerKind::cluster: return exact_cluster_summary(bidirect(g), root).distribution;
        case SamplerKind::cycle: return exact_cycle_summary(g, root).distribution;
        case SamplerKind::sink: return exact_sink_summary(g).distribution;
    }
    return {};
}

double expected_cycle_draws_green(const UndirectedGraph& g, Vertex root) {
    g.require_weights();
    if (!is_connected(g)) throw InvalidInput("graph is disconnected");
    const std::size_t n = g.n();
    if (n == 1) return 0.0;
    std::vector<std::size_t> slot(n, 0);
    std::size_t k = 0;
    for (Vertex v = 0; v < n; ++v)
        if (v != root) slot[v] = k++;
    Eigen::MatrixXd killed = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(k),
                                                       static_cast<Eigen::Index>(k));
    for (Vertex v = 0; v < n; ++v) {
        if (v == root) continue;
        double total = 0.0;
        for (EdgeId e : g.incident(v)) total += g.value(e);
        for (EdgeId e : g.incident(v)) {
            const Vertex u = g.other(e, v);
            if (u == root) continue;
            killed(static_cast<Eigen::Index>(slot[v]), static_cast<Eigen::Index>(slot[u])) -=
                g.value(e) / total;
        }
    }
    return killed.partialPivLu().inverse().trace();
}

}  // namespace prs
