#include "mbounds/sample.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "mbounds/errors.hpp"
#include "mbounds/summation.hpp"

namespace mbounds {
namespace {

// Doubles of magnitude at least 2^53 can no longer represent every integer,
// so integrality stops being a meaningful witness there.
constexpr double kIntegralLimit = 9007199254740992.0;

bool exactly_integral(double v) {
    return std::abs(v) < kIntegralLimit && v == std::nearbyint(v);
}

} // namespace

Sample::Sample(std::span<const double> values) {
    if (values.empty()) throw EmptySample("sample requires at least one value");
    values_.assign(values.begin(), values.end());
    for (double v : values_)
        if (!std::isfinite(v)) throw InvalidValue("sample values must be finite");
    std::sort(values_.begin(), values_.end(), std::greater<>());

    bool all_integral = std::all_of(values_.begin(), values_.end(), exactly_integral);
    bool strictly_decreasing = true;
    for (size_t i = 0; i + 1 < values_.size(); ++i)
        if (values_[i] <= values_[i + 1]) {
            strictly_decreasing = false;
            break;
        }
    distinct_integers_ = all_integral && strictly_decreasing;

    if (all_integral) {
        __int128 sum = 0;
        for (double v : values_) sum += static_cast<long long>(std::llround(v));
        integer_mean_ = sum % static_cast<__int128>(values_.size()) == 0;
    }
}

Sample::Sample(std::initializer_list<double> values)
    : Sample(std::span<const double>(values.begin(), values.size())) {}

double Sample::value(int j) const {
    if (j < 1 || j > size()) throw IndexError("order statistic index out of range");
    return values_[static_cast<size_t>(j) - 1];
}

double mean(const Sample& s) {
    CompensatedSum acc;
    for (double v : s.values()) acc.add(v);
    return acc.value() / s.size();
}

double central_moment(const Sample& s, int r) {
    if (r < 1) throw InvalidInput("moment order must be positive");
    double xbar = mean(s);
    CompensatedSum acc;
    for (double v : s.values()) acc.add(int_pow(v - xbar, r));
    return acc.value() / s.size();
}

double raw_moment(const Sample& s, int r) {
    if (r < 1) throw InvalidInput("moment order must be positive");
    CompensatedSum acc;
    for (double v : s.values()) acc.add(int_pow(v, r));
    return acc.value() / s.size();
}

double segment_mean(const Sample& s, int k, int j) {
    if (k < 1 || j < k || j > s.size()) throw IndexError("segment indices out of range");
    CompensatedSum acc;
    for (int i = k; i <= j; ++i) acc.add(s.value(i));
    return acc.value() / (j - k + 1);
}

MomentSummary summarize(const Sample& s, int max_r) {
    if (max_r < 1) throw InvalidInput("moment order must be positive");
    MomentSummary out;
    out.n = s.size();
    out.mean = mean(s);
    for (int r = 1; r <= max_r; ++r) {
        out.central[r] = central_moment(s, r);
        out.raw[r] = raw_moment(s, r);
    }
    return out;
}

} // namespace mbounds
