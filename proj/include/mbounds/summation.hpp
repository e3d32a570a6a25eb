#ifndef MBOUNDS_SUMMATION_HPP
#define MBOUNDS_SUMMATION_HPP

#include <cmath>
#include <cstddef>

namespace mbounds {

/// Neumaier variant of Kahan compensated summation.
class CompensatedSum {
public:
    void add(double x) noexcept {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// x^p for small nonnegative integer p by repeated multiplication.
inline double int_pow(double x, int p) noexcept {
    double acc = 1.0;
    for (int i = 0; i < p; ++i) acc *= x;
    return acc;
}

} // namespace mbounds

#endif
