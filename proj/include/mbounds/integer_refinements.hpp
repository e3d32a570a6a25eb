#ifndef MBOUNDS_INTEGER_REFINEMENTS_HPP
#define MBOUNDS_INTEGER_REFINEMENTS_HPP

#include <vector>

#include "mbounds/bounds.hpp"
#include "mbounds/exact.hpp"
#include "mbounds/sample.hpp"

namespace mbounds {

/// The three correction sums over a split index k.
enum class GammaKind { gamma1, gamma2, gamma3 };

/// Exact value of the selected correction sum:
///   gamma1(n,k) = sum_{i=1..k} (k-i)^2 (n-i)  +  sum_{i=k+1..n} (i-k-1)^2 (n-i)
///   gamma2: factor (i-1) in place of (n-i)
///   gamma3: factor (n-i)(i-1)
/// Requires n >= 3 and 1 <= k <= n-1.
BigInt gamma_sum(int n, int k, GammaKind kind);

/// Exact minima of the correction sums over k in {1..n-1}, divided by n.
/// beta1 uses gamma1 (gamma2 has the same minimum by the k -> n-k symmetry),
/// beta2 uses gamma3. Memoized; safe for concurrent callers.
struct BetaCorrection {
    int n = 0;
    BigRat beta1;
    BigRat beta2;
    int argmin_gamma1 = 0;
    int argmin_gamma2 = 0;
    int argmin_gamma3 = 0;
};
BetaCorrection beta_correction(int n);
BigRat beta1(int n);
BigRat beta2(int n);

/// Floor of the largest root of x^2 + b x - c for b, c >= 0. The result t
/// satisfies c - t^2 - t b >= 0 and (t+1)^2 + t b + b - c >= 0.
long long floor_of_largest_root(double b, double c);

/// Floor of the smallest root of -x^2 + b x - c, requiring b^2 >= 4c. The
/// result t satisfies c + t^2 - t b >= 0 always, and t b - (t+1)^2 + b - c >= 0
/// whenever the roots are at least 1 apart (b^2 >= 4c + 1); with a narrower
/// root gap t+1 can overshoot the larger root and only the first inequality
/// is certified.
long long floor_of_smallest_root(double b, double c);

/// Third-raw-moment interval tightened by beta1 on both ends.
/// Requires n >= 3, the distinct-integer witness, and M > mean > m.
BoundEntry m3_raw_bounds_refined(const Sample& s);

/// Central-moment forms of the tightened third-moment interval:
///  - the moment-dependent interval converted from the raw form,
///  - the box -(mean-m)^3/4 + beta1 <= m3 <= (M-mean)^3/4 - beta1.
std::vector<BoundEntry> m3_central_bounds_refined(const Sample& s);

/// Quadratic and cubic spread consequences of the tightened third moment:
///  - check m2 + ((m3+beta1)/(2 m2))^2 <= (M-m)^2/4, inverted to a spread
///    lower bound,
///  - check |m3 + beta1| <= (M-m)^3/(6 sqrt 3), likewise inverted.
std::vector<BoundEntry> m3_spread_inequalities(const Sample& s);

/// Fourth-moment upper bound tightened by beta2.
BoundEntry m4_upper_refined(const Sample& s);

/// Tightened bound m4 - m2^2 - m3^2/m2 <= (M-m)^4/64 - beta2, also inverted
/// to the spread lower bound (M-m) >= (64 (m4 - m2^2 - m3^2/m2 + beta2))^{1/4}.
BoundEntry m4_combo_upper_refined(const Sample& s);

/// Exact lower-bound constants for m4 over n distinct integers, by
/// minimization of the defining fourth-power sums:
///   without the integer-mean hypothesis: min_{k in [1,n-1]} (S4(k-1) + S4(n-k-1))/n
///   with it:                             min_{k in [1,n]}   (S4(k-1) + S4(n-k))/n
/// where S4(m) = 1^4 + ... + m^4.
BigRat m4_count_floor(int n, bool integer_mean);

/// Exact additive corrections c(n) for the range-based m4 lower bound:
///   without integer mean: min_{k in [1,n-1]} (S4(k-2) + S4(n-k-2))/n
///   with it:              min_{k in [1,n]}   (S4(k-2) + S4(n-k-1))/n
BigRat m4_range_correction(int n, bool integer_mean);

/// m4 lower bound depending only on the count n (and the integer-mean flag);
/// the caller asserts the underlying data are n distinct integers.
BoundEntry m4_lower_count_only(int n, bool integer_mean);

/// m4 lower bound (M-m)^4/(8n) + c(n); branch chosen by the sample witnesses.
BoundEntry m4_lower_with_range(const Sample& s);

} // namespace mbounds

#endif
