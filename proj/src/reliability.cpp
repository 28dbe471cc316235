#include "prs/reliability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace prs {

double modified_prob(double p, double beta) {
    if (std::isinf(beta)) return 0.0;
    const double damped = p * std::exp(-beta);
    return damped / (1.0 - p + damped);
}

GibbsInstance::GibbsInstance(const UndirectedGraph& g, Vertex root)
    : graph_([&] {
          g.require_probabilities();
          if (!is_connected(g)) throw InvalidInput("graph is disconnected");
          if (root >= g.n()) throw InvalidInput("root out of range");
          return bidirect(g);
      }()),
      root_(root),
      tree_(arborescence_toward_root(graph_, root)) {}

std::size_t GibbsInstance::hamiltonian(const ArcSubset& r) const {
    std::size_t missing = 0;
    for (ArcId a = 0; a < graph_.m(); ++a) missing += tree_[a] && !r[a];
    return missing;
}

double GibbsInstance::tilt(const ArcSubset& r) const {
    double f = 1.0;
    for (ArcId a = 0; a < graph_.m(); ++a) {
        const double p = graph_.fail_prob(a);
        if (tree_[a])
            f *= r[a] ? 1.0 : p / (1.0 - p);
        else
            f *= r[a] ? 1.0 - p : p;
    }
    return f;
}

double GibbsInstance::tree_survival() const {
    double s = 1.0;
    for (ArcId a = 0; a < graph_.m(); ++a)
        if (tree_[a]) s *= 1.0 - graph_.fail_prob(a);
    return s;
}

DirectedGraph GibbsInstance::tilted(double beta) const {
    std::vector<double> probs(graph_.m());
    for (ArcId a = 0; a < graph_.m(); ++a)
        probs[a] = tree_[a] ? modified_prob(graph_.fail_prob(a), beta) : graph_.fail_prob(a);
    return graph_.with_fail_probs(std::move(probs));
}

ArcSubset rho_beta_sample(const GibbsInstance& gi, double beta, ResamplingTable& table) {
    if (!(beta >= 0.0)) throw InvalidInput("beta must be non-negative");
    const auto d = gi.tilted(beta);
    return sample_root_connected_tarjan(d, gi.root(), table).value;
}

AnnealSchedule make_schedule(const GibbsInstance& gi, double epsilon) {
    const std::size_t energy = gi.max_energy();
    AnnealSchedule s;
    if (energy == 0) return s;
    const double p_max = gi.graph().max_fail_prob();
    const double n1 = static_cast<double>(energy);
    s.step = 1.0 / n1;
    s.target_beta = std::max(0.0, std::log(2.0 * n1 * p_max / (1.0 - p_max))) + std::log(4.0);
    const auto stages = static_cast<std::size_t>(std::ceil(s.target_beta * n1 - 1e-9));
    for (std::size_t i = 0; i <= stages; ++i) s.betas.push_back(static_cast<double>(i) * s.step);
    s.samples_per_stage =
        static_cast<std::size_t>(std::ceil(8.0 * static_cast<double>(stages) / (epsilon * epsilon)));
    s.log_q_bound = n1 * std::log(1.0 / (1.0 - p_max));
    if (-std::log(gi.tree_survival()) > s.log_q_bound * (1.0 + 1e-12))
        throw InvariantViolation("log Q exceeds (n-1) log(1/(1-p_max))");
    return s;
}

std::size_t repetitions_for_confidence(double confidence) {
    if (!(confidence > 0.0 && confidence < 1.0)) throw InvalidInput("confidence must lie in (0, 1)");
    for (std::size_t k = 5;; k += 2) {
        // Pr[Binomial(k, 1/4) >= (k+1)/2]: a majority of runs fail.
        long double tail = 0.0L;
        for (std::size_t j = (k + 1) / 2; j <= k; ++j) {
            const long double log_term = std::lgamma(k + 1.0L) - std::lgamma(j + 1.0L) -
                                         std::lgamma(k - j + 1.0L) + j * std::log(0.25L) +
                                         (k - j) * std::log(0.75L);
            tail += std::exp(log_term);
        }
        if (tail <= 1.0L - confidence) return k;
    }
}

namespace {

double single_estimate(const GibbsInstance& gi, const AnnealSchedule& schedule,
                       std::uint64_t seed, std::vector<StageDiagnostics>* stages) {
    const std::size_t count = schedule.betas.size();
    long double log_product = 0.0L;
    for (std::size_t i = 0; i < count; ++i) {
        const bool terminal = i + 1 == count;
        const double beta = schedule.betas[i];
        const auto d = gi.tilted(beta);
        const std::uint64_t stage_seed = derive_seed(seed, i);
        long double sum = 0.0L;
        for (std::size_t j = 0; j < schedule.samples_per_stage; ++j) {
            ResamplingTable table(derive_seed(stage_seed, j), d.m());
            const auto sample = sample_root_connected_tarjan(d, gi.root(), table).value;
            const std::size_t h = gi.hamiltonian(sample);
            sum += terminal ? (h == 0 ? 1.0L : 0.0L)
                            : std::exp(-static_cast<long double>(schedule.step) * h);
        }
        const double ratio = static_cast<double>(sum / schedule.samples_per_stage);
        if (stages) stages->push_back({beta, ratio, schedule.samples_per_stage, terminal});
        if (ratio <= 0.0) return std::numeric_limits<double>::quiet_NaN();
        log_product += std::log(static_cast<long double>(ratio));
    }
    // Z(inf) = 1 and Z(0) = Z_rel / prod_T (1 - p_a).
    return static_cast<double>(gi.tree_survival() * std::exp(-log_product));
}

}  // namespace

ReliabilityEstimate estimate_reliability(const UndirectedGraph& g, const ReliabilityOptions& options) {
    if (!(options.epsilon > 0.0 && options.epsilon < 1.0))
        throw InvalidInput("epsilon must lie in (0, 1)");
    ReliabilityEstimate result;
    result.epsilon = options.epsilon;
    result.seed = options.seed;
    const GibbsInstance gi(g, options.root);
    result.schedule = make_schedule(gi, options.epsilon);
    if (gi.max_energy() == 0) {
        result.repetitions = {1.0};
        return result;
    }
    const std::size_t reps = options.confidence ? repetitions_for_confidence(*options.confidence) : 1;
    for (std::size_t k = 0; k < reps; ++k) {
        const double v = single_estimate(gi, result.schedule, derive_seed(options.seed, k),
                                         k == 0 ? &result.stages : nullptr);
        result.repetitions.push_back(v);
    }
    auto sorted = result.repetitions;
    std::sort(sorted.begin(), sorted.end());
    result.value = sorted[sorted.size() / 2];
    return result;
}

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
    std::vector<std::size_t> parent;
};

}  // namespace

long double brute_force_zrel(const UndirectedGraph& g) {
    g.require_probabilities();
    const std::size_t m = g.m();
    if (m > kBruteForceMaxVariables) throw InvalidInput("too many edges for enumeration");
    long double total = 0.0L;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        UnionFind uf(g.n());
        std::size_t merges = 0;
        long double w = 1.0L;
        for (EdgeId e = 0; e < m; ++e) {
            const long double p = g.value(e);
            if (mask >> e & 1) {
                w *= 1.0L - p;
                merges += uf.unite(g.edge(e).u, g.edge(e).v);
            } else {
                w *= p;
            }
        }
        if (merges + 1 == g.n()) total += w;
    }
    return total;
}

long double brute_force_zreach(const DirectedGraph& d, Vertex root) {
    const std::size_t m = d.m();
    if (m > kBruteForceMaxVariables) throw InvalidInput("too many arcs for enumeration");
    if (root >= d.n()) throw InvalidInput("root out of range");
    const std::uint64_t all = (std::uint64_t{1} << d.n()) - 1;
    long double total = 0.0L;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::uint64_t reach = std::uint64_t{1} << root;
        for (bool grew = true; grew;) {
            grew = false;
            for (ArcId a = 0; a < m; ++a) {
                if ((mask >> a & 1) && (reach >> d.head(a) & 1) && !(reach >> d.tail(a) & 1)) {
                    reach |= std::uint64_t{1} << d.tail(a);
                    grew = true;
                }
            }
        }
        if (reach != all) continue;
        long double w = 1.0L;
        for (ArcId a = 0; a < m; ++a) {
            const long double p = d.fail_prob(a);
            w *= (mask >> a & 1) ? 1.0L - p : p;
        }
        total += w;
    }
    return total;
}

}  // namespace prs
