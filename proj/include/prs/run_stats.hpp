#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

namespace prs {

struct RunStats {
    std::uint64_t init_draws = 0;
    /// Draws after initialization.
    std::uint64_t resampled_vars = 0;
    std::uint64_t rounds = 0;
    std::vector<std::uint64_t> per_variable_resamples;
    double wall_time = 0.0;  // seconds

    std::uint64_t total_draws() const { return init_draws + resampled_vars; }

    RunStats& operator+=(const RunStats& other);
};

/// Counts plus a summary of the per-variable histogram. Wall time is omitted
/// unless asked for, so reports replay byte-for-byte.
nlohmann::json to_json(const RunStats& stats, bool include_timing = false);

}  // namespace prs
