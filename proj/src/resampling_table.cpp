#include "prs/resampling_table.hpp"

#include <cmath>
#include <stdexcept>

namespace prs {

namespace {

std::uint64_t entry(std::uint64_t keyed_seed, std::size_t variable, std::uint64_t position) {
    const std::uint64_t row = mix64(keyed_seed ^ (static_cast<std::uint64_t>(variable) * 0xd1b54a32d192ed03ULL));
    return mix64(row ^ mix64(position ^ 0x8cb92ba72f3d8dd7ULL));
}

}  // namespace

ResamplingTable::ResamplingTable(std::uint64_t seed, std::size_t variables)
    : seed_(seed), keyed_seed_(mix64(seed)), cursors_(variables, 0) {}

TableValue ResamplingTable::peek(std::size_t variable, std::uint64_t position) const {
    if (!presets_.empty()) {
        if (auto it = presets_.find(variable); it != presets_.end() && position < it->second.size())
            return {it->second[position]};
    }
    return {entry(keyed_seed_, variable, position)};
}

TableValue ResamplingTable::draw(std::size_t variable) {
    return peek(variable, cursors_[variable]++);
}

TableValue ResamplingTable::value_at(std::uint64_t seed, std::size_t variable,
                                     std::uint64_t position) {
    return {entry(mix64(seed), variable, position)};
}

void ResamplingTable::preset(std::size_t variable, std::span<const double> uniforms) {
    if (variable >= cursors_.size()) throw std::out_of_range("preset variable out of range");
    std::vector<std::uint64_t> raw;
    raw.reserve(uniforms.size());
    for (double u : uniforms) {
        if (!(u >= 0.0 && u < 1.0)) throw std::invalid_argument("preset values must lie in [0, 1)");
        raw.push_back(static_cast<std::uint64_t>(std::ldexp(u, 53)) << 11);
    }
    presets_[variable] = std::move(raw);
}

}  // namespace prs
