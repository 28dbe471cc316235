#include <doctest.h>

#include <cmath>
#include <vector>

#include "prs/resampling_table.hpp"

using namespace prs;

TEST_CASE("same seed and access sequence gives identical values") {
    ResamplingTable a(42, 4), b(42, 4);
    const std::size_t order[] = {0, 3, 3, 1, 0, 2, 2, 2};
    for (std::size_t v : order) CHECK(a.draw(v).raw == b.draw(v).raw);
}

TEST_CASE("entries do not depend on access order") {
    ResamplingTable a(7, 3), b(7, 3);
    const auto a0 = a.draw(0), a1 = a.draw(1), a0b = a.draw(0);
    const auto b1 = b.draw(1), b0 = b.draw(0), b0b = b.draw(0);
    CHECK(a0.raw == b0.raw);
    CHECK(a1.raw == b1.raw);
    CHECK(a0b.raw == b0b.raw);
}

TEST_CASE("cursor walk matches direct indexing") {
    ResamplingTable t(11, 2);
    for (std::uint64_t k = 0; k < 3; ++k) {
        CHECK(t.peek(1, k).raw == ResamplingTable::value_at(11, 1, k).raw);
        CHECK(t.draw(1).raw == ResamplingTable::value_at(11, 1, k).raw);
    }
    CHECK(t.cursor(1) == 3);
    CHECK(t.cursor(0) == 0);
}

TEST_CASE("different seeds differ") {
    CHECK(ResamplingTable::value_at(1, 0, 0).raw != ResamplingTable::value_at(2, 0, 0).raw);
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
}

TEST_CASE("streams of different variables look independent") {
    // Correlation of uniforms at equal positions, and a coin balance check.
    const std::size_t n = 200'000;
    double sx = 0, sy = 0, sxy = 0, sxx = 0, syy = 0;
    std::size_t heads = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const double x = ResamplingTable::value_at(5, 0, k).uniform();
        const double y = ResamplingTable::value_at(5, 1, k).uniform();
        sx += x;
        sy += y;
        sxy += x * y;
        sxx += x * x;
        syy += y * y;
        heads += ResamplingTable::value_at(5, 2, k).coin();
    }
    const double cov = sxy / n - (sx / n) * (sy / n);
    const double corr = cov / std::sqrt((sxx / n - sx * sx / n / n) * (syy / n - sy * sy / n / n));
    CHECK(std::abs(corr) < 5.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(sx / n - 0.5) < 0.005);
    CHECK(std::abs(static_cast<double>(heads) / n - 0.5) < 0.005);
}

TEST_CASE("preset overrides leading entries") {
    ResamplingTable t(3, 2);
    const double forced[] = {0.25, 0.75};
    t.preset(0, forced);
    CHECK(t.draw(0).uniform() == doctest::Approx(0.25));
    CHECK(t.draw(0).uniform() == doctest::Approx(0.75));
    CHECK(t.draw(0).raw == ResamplingTable::value_at(3, 0, 2).raw);
}
