#pragma once

#include <algorithm>
#include <chrono>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "prs/resampling_table.hpp"
#include "prs/run_stats.hpp"

namespace prs {

/// Two simultaneously occurring bad events share a variable.
class ExtremalityViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A sampler-internal invariant failed (popped set not a minimal cluster, ...).
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The draw budget ran out before a perfect assignment was found.
class RoundCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultMaxDraws = 1'000'000'000ULL;

struct PrsOptions {
    bool extremality_check = false;
    std::uint64_t max_draws = kDefaultMaxDraws;
};

struct BadEvent {
    std::size_t id;
    std::vector<std::size_t> vbl;
};

/// An extremal instance: variables 0..variable_count()-1, each redrawn by
/// `draw(i, table)` from its own distribution, and a detector filling in
/// the currently occurring bad events (empty means halt).
template <class I>
concept PrsInstance = requires(I& inst, const I& cinst, std::size_t var, ResamplingTable& table,
                               std::vector<BadEvent>& events) {
    { cinst.variable_count() } -> std::convertible_to<std::size_t>;
    inst.draw(var, table);
    cinst.occurring_events(events);
};

/// Partial rejection sampling for extremal instances: draw everything, then
/// repeatedly redraw the union of the variable sets of all occurring bad
/// events. Variables of one round are redrawn in increasing index order.
template <PrsInstance I>
RunStats run_prs(I& instance, ResamplingTable& table, const PrsOptions& options = {}) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t count = instance.variable_count();
    RunStats stats;
    stats.per_variable_resamples.assign(count, 0);
    for (std::size_t i = 0; i < count; ++i) instance.draw(i, table);
    stats.init_draws = count;

    std::vector<BadEvent> events;
    std::vector<std::size_t> owner(count, static_cast<std::size_t>(-1));
    std::vector<std::size_t> batch;
    for (;;) {
        events.clear();
        instance.occurring_events(events);
        if (events.empty()) break;

        batch.clear();
        for (std::size_t k = 0; k < events.size(); ++k) {
            for (std::size_t var : events[k].vbl) {
                if (owner[var] != static_cast<std::size_t>(-1)) {
                    if (options.extremality_check && owner[var] != k)
                        throw ExtremalityViolation("occurring bad events share a variable");
                    continue;
                }
                owner[var] = k;
                batch.push_back(var);
            }
        }
        std::sort(batch.begin(), batch.end());
        if (stats.total_draws() + batch.size() > options.max_draws)
            throw RoundCapExceeded("draw budget exhausted before reaching a perfect assignment");
        for (std::size_t var : batch) {
            instance.draw(var, table);
            ++stats.per_variable_resamples[var];
            owner[var] = static_cast<std::size_t>(-1);
        }
        stats.resampled_vars += batch.size();
        ++stats.rounds;
    }
    stats.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return stats;
}

}  // namespace prs
