#ifndef MBOUNDS_REFINED_BOUNDS_HPP
#define MBOUNDS_REFINED_BOUNDS_HPP

#include "mbounds/bounds.hpp"
#include "mbounds/sample.hpp"

namespace mbounds {

/// Largest moment order r accepted by the 2r-th moment operations
/// (m_{2r} overflows double range for wide samples past this point).
int max_moment_order() noexcept;
void set_max_moment_order(int r);

/// The two radii of the order-statistic interval built from m_{2r}:
///   upper radius = (n (n-j)^{2r-1} m2r / (j^{2r} + j (n-j)^{2r-1}))^{1/2r}
///   lower radius = (n (j-1)^{2r-1} m2r / ((n-j+1)^{2r} + (n-j+1)(j-1)^{2r-1}))^{1/2r}
/// j = n gives upper radius exactly 0 and j = 1 lower radius exactly 0.
struct OrderStatRadii {
    double lower = 0.0;
    double upper = 0.0;
};
OrderStatRadii order_stat_radii(int n, int j, int r, double m2r);

/// Two-sided bound on the segment mean x_(k,j) from the 2r-th central moment;
/// the lower radius is driven by k, the upper by j. (k,j) = (1,n) is refused
/// for r >= 2 (entry flagged inapplicable) and degenerates to [mean, mean]
/// at r = 1.
BoundEntry general_segment_interval(const Sample& s, int k, int j, int r);

/// Two-sided bound on the j-th largest value; the k = j case of the segment
/// interval. At r = 1 it coincides with ws_interval(s, j, j).
BoundEntry general_order_interval(const Sample& s, int j, int r);

/// Piecewise lower bound on m_{2r} from a single order statistic, choosing the
/// branch by the sign of x_j - mean. At j = 1 and j = n it reproduces
/// sharma_saini_m2r_lower exactly.
BoundEntry m2r_lower_piecewise(const Sample& s, int j, int r);

/// Upper bound on the j-th absolute deviation |x_j - mean|: the larger of the
/// two order-statistic radii.
BoundEntry abs_deviation_upper(const Sample& s, int j, int r);

} // namespace mbounds

#endif
