#ifndef MBOUNDS_POLYNOMIAL_HPP
#define MBOUNDS_POLYNOMIAL_HPP

#include <span>
#include <vector>

#include "mbounds/bounds.hpp"

namespace mbounds {

/// Monic polynomial x^n + b2 x^{n-2} + b3 x^{n-3} + ... + bn with zero
/// x^{n-1} coefficient, so the roots have mean zero. Degree n >= 2.
class DepressedPolynomial {
public:
    /// trailing = {b2, b3, ..., bn}; shorter lists are zero-padded, so a
    /// degree-5 polynomial may be given just {b2} for x^5 + b2 x^3.
    DepressedPolynomial(int degree, std::span<const double> trailing);

    int degree() const noexcept { return degree_; }

    /// Coefficient b_i for i in [2, degree]; b(i) of a padded slot is 0.
    double b(int i) const;

    /// Full coefficient list highest-degree-first: {1, 0, b2, ..., bn}.
    std::vector<double> monic_coefficients() const;

private:
    int degree_;
    std::vector<double> b_; ///< b_[i] holds b_{i+2}
};

/// Result of shifting a general monic polynomial x -> x - a1/n to kill the
/// x^{n-1} term. The depressed roots are the original roots plus `shift`
/// (shift = a1/n), so intervals on them translate back by -shift.
struct Depressed {
    double shift = 0.0;
    DepressedPolynomial poly;
};

/// trailing = {a1, a2, ..., an} of x^n + a1 x^{n-1} + ... + an.
Depressed depress(std::span<const double> trailing);

/// Central moments of the root multiset straight from the coefficients:
///   m2 = -2 b2 / n,  m3 = -3 b3 / n,  m4 = 2 (b2^2 - 2 b4) / n
/// (absent coefficients are zero; the root mean is zero by construction).
/// b2 > 0 is rejected: sum of squared real roots cannot be negative.
struct PolyMoments {
    double m2 = 0.0;
    double m3 = 0.0;
    double m4 = 0.0;
};
PolyMoments poly_moments(const DepressedPolynomial& p);

/// Two-sided bound on the j-th largest root through the moment route
/// (coefficients -> m_{2r} -> order-statistic interval with mean 0).
/// r = 2 requires degree >= 5.
BoundEntry root_interval(const DepressedPolynomial& p, int j, int r);

/// Necessary condition for n distinct integer roots:
///   b2^2 - 2 b4 >= n * t(n) / 2
/// with t(n) the integer-mean m4 floor. A failed check certifies the roots
/// are NOT n distinct integers; a pass certifies nothing.
BoundEntry integer_roots_necessary(const DepressedPolynomial& p);

/// Hypotheses supplied by the caller for the refined span entries. The
/// integer-mean flag refers to the polynomial before depression: it holds
/// when the depressing shift a1/n is an integer (always true for a directly
/// given depressed polynomial, whose root mean is 0).
struct IntegerRootsClaim {
    bool distinct_integer_roots = false;
    bool integer_mean = true;
};

/// Span bounds: baselines sqrt(2 n m2), (8 n m4)^{1/4} upper and
/// (64 (m4 - m2^2 - m3^2/m2))^{1/4} lower; plus, under the distinct-integer
/// claim, the refined upper (8n (m4 - c(n)))^{1/4} and refined lower
/// (64 (m4 - m2^2 - m3^2/m2 + beta2))^{1/4}.
std::vector<BoundEntry> span_bounds(const DepressedPolynomial& p,
                                    const IntegerRootsClaim& claim = {});

} // namespace mbounds

#endif
