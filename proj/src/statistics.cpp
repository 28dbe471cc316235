#include "prs/statistics.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>

namespace prs {

void MeanAccumulator::add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
}

double MeanAccumulator::variance() const {
    return count_ < 2 ? 0.0 : m2_ / static_cast<double>(count_ - 1);
}

double MeanAccumulator::stderr_of_mean() const {
    return count_ == 0 ? 0.0 : std::sqrt(variance() / static_cast<double>(count_));
}

namespace {

std::uint64_t total_of(const Counts& counts) {
    std::uint64_t total = 0;
    for (const auto& [key, c] : counts) total += c;
    return total;
}

}  // namespace

double tv_distance(const Counts& counts, const std::map<std::uint64_t, double>& exact) {
    const double total = static_cast<double>(total_of(counts));
    if (total == 0) return 1.0;
    double sum = 0.0;
    for (const auto& [key, p] : exact) {
        const auto it = counts.find(key);
        const double f = it == counts.end() ? 0.0 : static_cast<double>(it->second) / total;
        sum += std::abs(f - p);
    }
    for (const auto& [key, c] : counts)
        if (!exact.contains(key)) sum += static_cast<double>(c) / total;
    return 0.5 * sum;
}

double expected_tv_noise(const std::map<std::uint64_t, double>& exact, std::uint64_t samples) {
    double sum = 0.0;
    for (const auto& [key, p] : exact) sum += std::sqrt(p * (1.0 - p));
    return sum * std::sqrt(1.0 / (2.0 * std::numbers::pi * static_cast<double>(samples)));
}

double chi_square_upper_tail(double statistic, std::size_t dof) {
    if (dof == 0 || statistic <= 0.0) return 1.0;
    return boost::math::gamma_q(0.5 * static_cast<double>(dof), 0.5 * statistic);
}

ChiSquare chi_square_test(const Counts& counts, const std::map<std::uint64_t, double>& exact,
                          double min_expected) {
    const double total = static_cast<double>(total_of(counts));
    for (const auto& [key, c] : counts)
        if (!exact.contains(key)) return {INFINITY, 0, 0.0};
    double stat = 0.0, pooled_expected = 0.0, pooled_observed = 0.0;
    std::size_t bins = 0;
    for (const auto& [key, p] : exact) {
        const double expected = p * total;
        const auto it = counts.find(key);
        const double observed = it == counts.end() ? 0.0 : static_cast<double>(it->second);
        if (expected < min_expected) {
            pooled_expected += expected;
            pooled_observed += observed;
            continue;
        }
        stat += (observed - expected) * (observed - expected) / expected;
        ++bins;
    }
    if (pooled_expected > 0.0) {
        stat += (pooled_observed - pooled_expected) * (pooled_observed - pooled_expected) / pooled_expected;
        ++bins;
    }
    const std::size_t dof = bins > 0 ? bins - 1 : 0;
    return {stat, dof, chi_square_upper_tail(stat, dof)};
}

}  // namespace prs
