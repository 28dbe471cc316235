#include <doctest.h>

#include "prs/cycle_popping.hpp"
#include "prs/generators.hpp"
#include "prs/oracle.hpp"
#include "prs/statistics.hpp"

using namespace prs;

TEST_CASE("draw_arrow uniform degree 3") {
    const auto g = complete_graph(4, 1.0);
    std::map<Vertex, std::size_t> freq;
    const std::size_t n = 60'000;
    ResamplingTable t(2, 4);
    for (std::size_t i = 0; i < n; ++i) ++freq[draw_arrow(g, 0, t)];
    REQUIRE(freq.size() == 3);
    for (auto [v, c] : freq) CHECK(std::abs(static_cast<double>(c) / n - 1.0 / 3) < 0.01);
}

TEST_CASE("draw_arrow weights 1 and 3") {
    const UndirectedGraph g(3, {{0, 1, 1.0}, {0, 2, 3.0}});
    std::size_t to2 = 0;
    const std::size_t n = 60'000;
    ResamplingTable t(3, 3);
    for (std::size_t i = 0; i < n; ++i) to2 += draw_arrow(g, 0, t) == 2;
    CHECK(std::abs(static_cast<double>(to2) / n - 0.75) < 0.01);
}

TEST_CASE("draw_arrow degree 1 consumes one entry") {
    const auto g = path_graph(2, 1.0);
    ResamplingTable t(4, 2);
    CHECK(draw_arrow(g, 1, t) == 0);
    CHECK(t.cursor(1) == 1);
    const UndirectedGraph isolated(2, {});
    CHECK_THROWS_AS(draw_arrow(isolated, 0, t), InvalidInput);
}

TEST_CASE("find_cycles") {
    using Cycles = std::vector<std::vector<Vertex>>;
    // path 0-1-2 with 1->2, 2->1
    CHECK(find_cycles({0, 2, 1}, 0) == Cycles{{1, 2}});
    CHECK(find_cycles({0, 0, 1}, 0).empty());
    // triangle with 1->2, 2->1
    CHECK(find_cycles({0, 2, 1}, 0) == Cycles{{1, 2}});
    // two disjoint cycles and a tail into one of them
    CHECK(find_cycles({0, 2, 1, 4, 5, 3, 3}, 0) == Cycles{{1, 2}, {3, 4, 5}});
}

TEST_CASE("triangle spanning trees are uniform") {
    const auto g = cycle_graph(3, 1.0);
    const auto exact = exact_cycle_summary(g, 0).distribution;
    REQUIRE(exact.size() == 3);
    for (auto [k, p] : exact) CHECK(p == doctest::Approx(1.0 / 3));
    Counts c;
    for (std::uint64_t seed = 0; seed < 100'000; ++seed) {
        ResamplingTable t(seed, 3);
        const auto s = sample_spanning_tree(g, 0, t, {true, kDefaultMaxDraws});
        REQUIRE(is_spanning_tree(g, s.value));
        ++c[outcome_key(g, s.value)];
    }
    CHECK(tv_distance(c, exact) <= 0.01);
}

TEST_CASE("path r-u-v mean resampled 2") {
    const auto g = path_graph(3, 1.0);
    MeanAccumulator acc;
    for (std::uint64_t seed = 0; seed < 40'000; ++seed) {
        ResamplingTable t(seed, 3);
        acc.add(static_cast<double>(sample_spanning_tree(g, 0, t).stats.resampled_vars));
    }
    CHECK(std::abs(acc.mean() - 2.0) < 4.0 * acc.stderr_of_mean());
}

TEST_CASE("mean total draws match the Green's function") {
    const auto g = lollipop(3, 4, 1.0, 2.0);
    const double expected = expected_cycle_draws_green(g, 0);
    MeanAccumulator acc;
    for (std::uint64_t seed = 0; seed < 40'000; ++seed) {
        ResamplingTable t(seed, g.n());
        acc.add(static_cast<double>(sample_spanning_tree(g, 0, t).stats.total_draws()));
    }
    CHECK(std::abs(acc.mean() - expected) < 4.0 * acc.stderr_of_mean());
}

TEST_CASE("preconditions") {
    ResamplingTable t(1, 4);
    const UndirectedGraph split(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    CHECK_THROWS_AS(sample_spanning_tree(split, 0, t), InvalidInput);
    CHECK_THROWS_AS(sample_spanning_tree(path_graph(3, -1.0), 0, t), InvalidInput);
}
