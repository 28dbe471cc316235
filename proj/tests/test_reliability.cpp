#include <doctest.h>

#include <cmath>

#include "prs/generators.hpp"
#include "prs/oracle.hpp"
#include "prs/reliability.hpp"
#include "prs/statistics.hpp"

using namespace prs;

TEST_CASE("modified_prob") {
    CHECK(modified_prob(0.3, 0.0) == doctest::Approx(0.3));
    CHECK(modified_prob(0.5, std::log(2.0)) == doctest::Approx(1.0 / 3));
    CHECK(modified_prob(0.7, INFINITY) == 0.0);
    CHECK(modified_prob(0.7, 2.0) < modified_prob(0.7, 1.0));
}

TEST_CASE("brute force partition functions") {
    const auto tri = cycle_graph(3, 0.5);
    CHECK(static_cast<double>(brute_force_zrel(tri)) == doctest::Approx(0.5));
    const auto path = path_graph(3, 0.5);
    CHECK(static_cast<double>(brute_force_zrel(path)) == doctest::Approx(0.25));
    CHECK(static_cast<double>(brute_force_zreach(bidirect(path), 0)) == doctest::Approx(0.25));
    const UndirectedGraph edge(2, {{0, 1, 0.3}});
    CHECK(static_cast<double>(brute_force_zrel(edge)) == doctest::Approx(0.7));
    CHECK(static_cast<double>(brute_force_zreach(bidirect(edge), 1)) == doctest::Approx(0.7));
}

TEST_CASE("Gibbs instance pieces") {
    const GibbsInstance gi(cycle_graph(3, 0.5), 0);
    CHECK(gi.max_energy() == 2);
    CHECK(gi.tree_survival() == doctest::Approx(0.25));
    ArcSubset none(6, false), tree = gi.tree();
    CHECK(gi.hamiltonian(tree) == 0);
    CHECK(gi.hamiltonian(none) == 2);
    const ArcSubset all(6, true);
    CHECK(gi.tilt(all) == doctest::Approx(0.5 * 0.5 * 0.5 * 0.5));
    CHECK_THROWS_AS(GibbsInstance(UndirectedGraph(3, {{0, 1, 0.5}}), 0), InvalidInput);
}

TEST_CASE("beta = inf on a single edge keeps the tree arc") {
    const UndirectedGraph g(2, {{0, 1, 0.3}});
    const GibbsInstance gi(g, 0);
    std::size_t back = 0;
    const std::size_t n = 20'000;
    for (std::uint64_t seed = 0; seed < n; ++seed) {
        ResamplingTable t(seed, 2);
        const auto s = rho_beta_sample(gi, INFINITY, t);
        REQUIRE(s[1]);
        back += s[0];
    }
    CHECK(std::abs(static_cast<double>(back) / n - 0.7) < 0.015);
}

TEST_CASE("rho_beta on a triangle matches enumeration of the tilt") {
    const GibbsInstance gi(cycle_graph(3, 0.5), 0);
    const auto& d = gi.graph();
    for (double beta : {0.0, std::log(2.0)}) {
        std::map<std::uint64_t, double> exact;
        double z = 0.0;
        for (std::uint64_t mask = 0; mask < 64; ++mask) {
            ArcSubset r(6);
            for (ArcId a = 0; a < 6; ++a) r[a] = mask >> a & 1;
            if (!is_root_connected(d, r, 0)) continue;
            const double w = std::exp(-beta * gi.hamiltonian(r)) * gi.tilt(r);
            exact[mask] = w;
            z += w;
        }
        for (auto& [k, w] : exact) w /= z;
        if (beta == 0.0) {
            const auto plain = exact_cluster_summary(d, 0).distribution;
            for (auto [k, p] : plain) CHECK(exact[k] == doctest::Approx(p));
        }
        Counts c;
        for (std::uint64_t seed = 0; seed < 100'000; ++seed) {
            ResamplingTable t(seed, 6);
            ++c[outcome_key(rho_beta_sample(gi, beta, t))];
        }
        CHECK(tv_distance(c, exact) <= 0.01);
    }
}

TEST_CASE("schedule shape") {
    const GibbsInstance gi(cycle_graph(4, 0.5), 0);
    const auto s = make_schedule(gi, 0.1);
    CHECK(s.step == doctest::Approx(1.0 / 3));
    CHECK(s.target_beta == doctest::Approx(std::log(6.0) + std::log(4.0)));
    CHECK(s.betas.size() == static_cast<std::size_t>(std::ceil(s.target_beta * 3)) + 1);
    CHECK(s.betas.front() == 0.0);
    CHECK(s.samples_per_stage == static_cast<std::size_t>(std::ceil(8.0 * (s.betas.size() - 1) / 0.01)));
}

TEST_CASE("repetitions for confidence") {
    CHECK(repetitions_for_confidence(0.5) == 5);
    std::size_t prev = 0;
    for (double c : {0.9, 0.99, 0.999}) {
        const auto k = repetitions_for_confidence(c);
        CHECK(k % 2 == 1);
        CHECK(k >= prev);
        prev = k;
    }
    CHECK_THROWS_AS(repetitions_for_confidence(1.0), InvalidInput);
}

TEST_CASE("estimates") {
    const UndirectedGraph edge(2, {{0, 1, 0.3}});
    CHECK(std::abs(estimate_reliability(edge, {0.05, 1}).value / 0.7 - 1.0) <= 0.05);

    const auto tri = estimate_reliability(cycle_graph(3, 0.5), {0.1, 1});
    CHECK(std::abs(tri.value / 0.5 - 1.0) <= 0.1);
    CHECK(tri.stages.size() == tri.schedule.betas.size());
    CHECK(tri.stages.back().terminal);

    const UndirectedGraph tree(4, {{0, 1, 0.2}, {1, 2, 0.4}, {1, 3, 0.6}});
    const double exact = 0.8 * 0.6 * 0.4;
    CHECK(std::abs(estimate_reliability(tree, {0.1, 3}).value / exact - 1.0) <= 0.1);

    CHECK(estimate_reliability(UndirectedGraph(1, {}), {}).value == 1.0);
}

TEST_CASE("confidence takes a median") {
    ReliabilityOptions o{0.2, 4, 0.9, 0};
    const auto est = estimate_reliability(cycle_graph(3, 0.5), o);
    CHECK(est.repetitions.size() == repetitions_for_confidence(0.9));
    auto sorted = est.repetitions;
    std::sort(sorted.begin(), sorted.end());
    CHECK(est.value == sorted[sorted.size() / 2]);
}

TEST_CASE("estimator input checks") {
    CHECK_THROWS_AS(estimate_reliability(UndirectedGraph(3, {{0, 1, 0.5}})), InvalidInput);
    CHECK_THROWS_AS(estimate_reliability(cycle_graph(3, 0.5), {1.5, 1}), InvalidInput);
    CHECK_THROWS_AS(estimate_reliability(cycle_graph(3, 1.0)), InvalidInput);
}
