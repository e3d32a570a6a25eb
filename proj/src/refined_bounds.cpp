#include "mbounds/refined_bounds.hpp"

#include <atomic>
#include <cmath>

#include "mbounds/errors.hpp"
#include "mbounds/summation.hpp"

namespace mbounds {
namespace {

std::atomic<int> g_max_order{8};

void require_order(int r) {
    if (r < 1) throw InvalidInput("moment order must be positive");
    if (r > max_moment_order()) throw InvalidInput("moment order exceeds the configured cap");
}

BoundEntry segment_entry(const Sample& s, int k, int j, int r, bool as_order_stat) {
    int n = s.size();
    if (n < 2) throw DegenerateSample("bound requires at least two values");
    if (k < 1 || j < k || j > n) throw IndexError("segment indices out of range");
    require_order(r);

    BoundEntry e;
    e.id = as_order_stat ? "gen-order" : "gen-segment";
    e.eq_tag = as_order_stat ? "2e3" : "2e1";
    e.kind = BoundKind::two_sided;
    e.target = as_order_stat ? BoundTarget::x_j : BoundTarget::x_kj;
    e.refines = as_order_stat ? "ws-order" : "ws-segment";
    if (!as_order_stat) e.with_param("k", k);
    e.with_param("j", j).with_param("r", r);

    if (k == 1 && j == n && r >= 2) {
        e.applicable = false;
        e.note = "the full-range segment is excluded for r >= 2";
        return e;
    }

    double xbar = mean(s);
    double m2r = central_moment(s, 2 * r);
    e.lower = xbar - order_stat_radii(n, k, r, m2r).lower;
    e.upper = xbar + order_stat_radii(n, j, r, m2r).upper;
    return e;
}

} // namespace

int max_moment_order() noexcept { return g_max_order.load(std::memory_order_relaxed); }

void set_max_moment_order(int r) {
    if (r < 1) throw InvalidInput("moment order cap must be positive");
    g_max_order.store(r, std::memory_order_relaxed);
}

OrderStatRadii order_stat_radii(int n, int j, int r, double m2r) {
    if (n < 1) throw InvalidInput("sample size must be positive");
    if (j < 1 || j > n) throw IndexError("order statistic index out of range");
    require_order(r);
    if (m2r < 0.0) throw InvalidInput("even central moment cannot be negative");

    OrderStatRadii radii;
    double root = 1.0 / (2 * r);
    if (j < n) {
        double w = int_pow(double(n - j), 2 * r - 1);
        radii.upper = std::pow(n * w * m2r / (int_pow(double(j), 2 * r) + j * w), root);
    }
    if (j > 1) {
        double w = int_pow(double(j - 1), 2 * r - 1);
        double q = double(n - j + 1);
        radii.lower = std::pow(n * w * m2r / (int_pow(q, 2 * r) + q * w), root);
    }
    return radii;
}

BoundEntry general_segment_interval(const Sample& s, int k, int j, int r) {
    return segment_entry(s, k, j, r, false);
}

BoundEntry general_order_interval(const Sample& s, int j, int r) {
    return segment_entry(s, j, j, r, true);
}

BoundEntry m2r_lower_piecewise(const Sample& s, int j, int r) {
    int n = s.size();
    if (n < 2) throw DegenerateSample("bound requires at least two values");
    if (j < 1 || j > n) throw IndexError("order statistic index out of range");
    require_order(r);

    BoundEntry e;
    e.id = "m2r-piecewise";
    e.eq_tag = "re1";
    e.kind = BoundKind::lower;
    e.target = BoundTarget::m2r;
    e.refines = "sharma-saini";
    e.with_param("r", r).with_param("j", j);

    double dev = s.value(j) - mean(s);
    // The ordering pins the sign at the ends: x_1 >= mean >= x_n. Rounding
    // cannot push x_n above the mean (or x_1 below) far enough to matter; if
    // it does, the zero bound is still valid.
    if (dev == 0.0 || (dev > 0.0 && j == n) || (dev < 0.0 && j == 1)) {
        e.lower = 0.0;
        return e;
    }
    double coeff;
    if (dev > 0.0) {
        double w = int_pow(double(n - j), 2 * r - 1);
        coeff = (int_pow(double(j), 2 * r) + j * w) / (n * w);
    } else {
        double w = int_pow(double(j - 1), 2 * r - 1);
        double q = double(n - j + 1);
        coeff = (int_pow(q, 2 * r) + q * w) / (n * w);
    }
    e.lower = coeff * int_pow(dev, 2 * r);
    return e;
}

BoundEntry abs_deviation_upper(const Sample& s, int j, int r) {
    int n = s.size();
    if (j < 1 || j > n) throw IndexError("order statistic index out of range");
    require_order(r);
    double m2r = central_moment(s, 2 * r);
    OrderStatRadii radii = order_stat_radii(n, j, r, m2r);
    BoundEntry e;
    e.id = "abs-deviation";
    e.eq_tag = "1c1";
    e.kind = BoundKind::upper;
    e.target = BoundTarget::d_j;
    e.upper = std::max(radii.lower, radii.upper);
    e.with_param("j", j).with_param("r", r);
    return e;
}

} // namespace mbounds
