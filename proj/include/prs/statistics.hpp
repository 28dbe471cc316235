#pragma once

#include <cstdint>
#include <map>

namespace prs {

/// Running mean and sample variance (Welford).
class MeanAccumulator {
public:
    void add(double x);
    std::uint64_t count() const { return count_; }
    double mean() const { return mean_; }
    double variance() const;
    double stderr_of_mean() const;

private:
    std::uint64_t count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

using Counts = std::map<std::uint64_t, std::uint64_t>;

/// Total variation distance between empirical frequencies and `exact`.
/// Outcomes seen but absent from `exact` count in full.
double tv_distance(const Counts& counts, const std::map<std::uint64_t, double>& exact);

/// Expected TV distance between an exact sampler's empirical distribution
/// after `samples` draws and the truth (normal approximation,
/// sqrt(1/(2 pi N)) * sum_i sqrt(p_i (1 - p_i))).
double expected_tv_noise(const std::map<std::uint64_t, double>& exact, std::uint64_t samples);

struct ChiSquare {
    double statistic;
    std::size_t dof;
    double p_value;
};

/// Pearson goodness of fit. Outcomes with expected count below `min_expected`
/// are pooled into one bin; outcomes outside the support make the p-value 0.
ChiSquare chi_square_test(const Counts& counts, const std::map<std::uint64_t, double>& exact,
                          double min_expected = 5.0);

/// Upper tail of the chi-square distribution.
double chi_square_upper_tail(double statistic, std::size_t dof);

}  // namespace prs
