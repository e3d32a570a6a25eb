#ifndef MBOUNDS_CLASSIC_BOUNDS_HPP
#define MBOUNDS_CLASSIC_BOUNDS_HPP

#include <vector>

#include "mbounds/bounds.hpp"
#include "mbounds/sample.hpp"

namespace mbounds {

/// Samuelson interval: every x_j lies in mean +/- sqrt((n-1) m2).
/// Requires n >= 2.
BoundEntry samuelson_interval(const Sample& s, int j);

/// Wolkowicz-Styan interval for the segment mean x_(k,j):
///   mean - sqrt((k-1)/(n-k+1)) sqrt(m2) <= x_(k,j)
///   x_(k,j) <= mean + sqrt((n-j)/j) sqrt(m2).
/// With k the same as j this bounds the j-th order statistic.
BoundEntry ws_interval(const Sample& s, int k, int j);

/// Nagy lower bound m2 >= (M - m)^2 / (2n). Requires n >= 2.
BoundEntry nagy_m2_lower(const Sample& s);

/// Even-moment extension m_{2r} >= (M - m)^{2r} / (2^{2r-1} n).
BoundEntry sharma_m2r_lower(const Sample& s, int r);

/// Order-statistic even-moment bound
///   m_{2r} >= (1 + (n-1)^{2r-1}) / (n (n-1)^{2r-1}) * (x_j - mean)^{2r}.
BoundEntry sharma_saini_m2r_lower(const Sample& s, int r, int j);

/// Third-moment baselines:
///  - raw-moment interval on m'_3 from the first two raw moments,
///  - its central-moment conversion,
///  - the box -(mean-m)^3/4 <= m3 <= (M-mean)^3/4,
///  - derived checks m2 + (m3/(2 m2))^2 <= (M-m)^2/4 and |m3| <= (M-m)^3/(6 sqrt 3).
/// Requires n >= 2 and a non-constant sample (M > mean > m).
std::vector<BoundEntry> sharma_m3_bounds(const Sample& s);

/// Fourth-moment baselines:
///  - the upper bound on m4 from mean, m2, M, m (flagged inapplicable when its
///    denominator (M-mean)(mean-m) - m2 vanishes),
///  - the upper bound (M-m)^4/64 on the combination m4 - m2^2 - m3^2/m2.
/// Requires n >= 2 and m2 > 0.
std::vector<BoundEntry> sharma_m4_upper(const Sample& s);

} // namespace mbounds

#endif
