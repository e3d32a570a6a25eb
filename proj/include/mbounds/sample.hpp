#ifndef MBOUNDS_SAMPLE_HPP
#define MBOUNDS_SAMPLE_HPP

#include <map>
#include <span>
#include <vector>

namespace mbounds {

/// Immutable real sample held in descending order (x_1 >= x_2 >= ... >= x_n).
///
/// Construction sorts the input and computes two cached witnesses:
///  - distinct_integers: every value is exactly integral and all are pairwise
///    distinct (no tolerance; the integer refinements are invalid under
///    perturbation, so values meant as integers must parse exactly),
///  - integer_mean: the exact integer sum is divisible by n (only meaningful
///    when all values are integral).
class Sample {
public:
    explicit Sample(std::span<const double> values);
    explicit Sample(std::initializer_list<double> values);

    int size() const noexcept { return static_cast<int>(values_.size()); }

    /// j-th largest value, 1-based.
    double value(int j) const;

    const std::vector<double>& values() const noexcept { return values_; }

    double max() const noexcept { return values_.front(); }
    double min() const noexcept { return values_.back(); }

    bool distinct_integers() const noexcept { return distinct_integers_; }
    bool integer_mean() const noexcept { return integer_mean_; }

private:
    std::vector<double> values_;
    bool distinct_integers_ = false;
    bool integer_mean_ = false;
};

/// Arithmetic mean.
double mean(const Sample& s);

/// r-th central moment (1/n) * sum (x_i - mean)^r, r >= 1.
double central_moment(const Sample& s, int r);

/// r-th raw moment (1/n) * sum x_i^r, r >= 1.
double raw_moment(const Sample& s, int r);

/// Mean of x_k..x_j under the descending order, 1-based, k <= j.
double segment_mean(const Sample& s, int k, int j);

/// Central and raw moments up to a requested order, plus the mean.
struct MomentSummary {
    int n = 0;
    double mean = 0.0;
    std::map<int, double> central; ///< r -> m_r for r = 1..max_r
    std::map<int, double> raw;     ///< r -> m'_r for r = 1..max_r
};

MomentSummary summarize(const Sample& s, int max_r);

} // namespace mbounds

#endif
