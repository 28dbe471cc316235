#include <doctest.h>

#include <cmath>

#include "prs/bench.hpp"
#include "prs/generators.hpp"

using namespace prs;

TEST_CASE("family names") {
    CHECK(parse_bench_family("lollipop-cluster") == BenchFamily::lollipop_cluster);
    CHECK(parse_bench_family("cycle-sink") == BenchFamily::cycle_sink);
    CHECK_THROWS_AS(parse_bench_family("nope"), InvalidInput);
}

TEST_CASE("cycle-sink row") {
    BenchOptions o;
    o.family = BenchFamily::cycle_sink;
    o.sizes = {10};
    o.reps = 4000;
    const auto rows = run_bench(o);
    REQUIRE(rows.size() == 1);
    const auto& r = rows.front();
    CHECK(r.bound == 100.0);
    CHECK(std::abs(r.total_draws.mean - 100.0) < 4.0 * r.total_draws.stderr_);
    CHECK(r.init_draws.mean == 10.0);
}

TEST_CASE("rows replay") {
    const auto g = lollipop(3, 4, 0.5);
    const auto a = bench_cluster(g, 0, 200, 9), b = bench_cluster(g, 0, 200, 9);
    CHECK(bench_csv_row(a) == bench_csv_row(b));
}

TEST_CASE("csv layout") {
    const auto header = bench_csv_header();
    const auto row = bench_csv_row(bench_sink(cycle_graph(4), 10, 1));
    CHECK(std::count(header.begin(), header.end(), ',') == std::count(row.begin(), row.end(), ','));
    CHECK(bench_csv_schema().find("ratio") != std::string::npos);
}

TEST_CASE("sweep rows respect the bounds") {
    for (const char* kind : {"cluster", "cycle", "sink"}) {
        BenchOptions o;
        o.family = BenchFamily::random_bound_sweep;
        o.kind = kind;
        o.sizes = {5};
        o.reps = 300;
        for (const auto& r : run_bench(o)) {
            CHECK(r.within_bound);
            CHECK(r.variables_within_bound);
        }
    }
}
