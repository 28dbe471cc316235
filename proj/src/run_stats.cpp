#include "prs/run_stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace prs {

RunStats& RunStats::operator+=(const RunStats& other) {
    // A default-constructed accumulator adopts the other's variable set.
    if (per_variable_resamples.empty() && init_draws == 0)
        per_variable_resamples.assign(other.per_variable_resamples.size(), 0);
    if (per_variable_resamples.size() != other.per_variable_resamples.size())
        throw std::invalid_argument("run stats over different variable sets");
    init_draws += other.init_draws;
    resampled_vars += other.resampled_vars;
    rounds += other.rounds;
    for (std::size_t i = 0; i < per_variable_resamples.size(); ++i)
        per_variable_resamples[i] += other.per_variable_resamples[i];
    wall_time += other.wall_time;
    return *this;
}

nlohmann::json to_json(const RunStats& stats, bool include_timing) {
    const auto& per = stats.per_variable_resamples;
    std::uint64_t max_count = 0, touched = 0;
    for (auto c : per) {
        max_count = std::max(max_count, c);
        touched += c > 0;
    }
    nlohmann::json j = {
        {"init_draws", stats.init_draws},
        {"resampled_vars", stats.resampled_vars},
        {"total_draws", stats.total_draws()},
        {"rounds", stats.rounds},
        {"per_variable",
         {{"variables", per.size()}, {"max_resamples", max_count}, {"resampled_at_least_once", touched}}},
    };
    if (include_timing) j["wall_time"] = stats.wall_time;
    return j;
}

}  // namespace prs
