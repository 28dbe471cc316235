#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace prs {

/// One entry of the resampling table. Carries the raw 64-bit word; samplers
/// interpret it (uniform in [0,1), coin, ...).
struct TableValue {
    std::uint64_t raw;

    /// Uniform in [0, 1) from the top 53 bits.
    double uniform() const { return static_cast<double>(raw >> 11) * 0x1.0p-53; }
    bool coin() const { return (raw >> 63) != 0; }
};

/// Stateless 64-bit finalizer (splitmix64).
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for replicate `index` derived from a master seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index + 0x632be59bd9b4e019ULL));
}

/// Conceptual infinite stack of pre-drawn values per variable. Entry k of
/// variable i is a pure function of (seed, i, k), so nothing is stored
/// beyond one cursor per variable and two runs over the same seed read
/// identical stacks regardless of access order.
class ResamplingTable {
public:
    ResamplingTable(std::uint64_t seed, std::size_t variables);

    /// Reads the entry under the cursor of `variable` and advances it.
    TableValue draw(std::size_t variable);

    /// Entry `position` of `variable` without touching any cursor.
    TableValue peek(std::size_t variable, std::uint64_t position) const;

    static TableValue value_at(std::uint64_t seed, std::size_t variable, std::uint64_t position);

    std::uint64_t cursor(std::size_t variable) const { return cursors_[variable]; }
    std::uint64_t seed() const { return seed_; }
    std::size_t variables() const { return cursors_.size(); }

    /// Replaces the first entries of `variable` with the given uniforms.
    /// Test hook for forcing specific initial states.
    void preset(std::size_t variable, std::span<const double> uniforms);

private:
    std::uint64_t seed_;
    std::uint64_t keyed_seed_;
    std::vector<std::uint64_t> cursors_;
    std::unordered_map<std::size_t, std::vector<std::uint64_t>> presets_;
};

}  // namespace prs
