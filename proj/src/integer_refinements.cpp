#include "mbounds/integer_refinements.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "mbounds/classic_bounds.hpp"
#include "mbounds/errors.hpp"
#include "mbounds/summation.hpp"

namespace mbounds {
namespace {

void require_gamma_domain(int n, int k) {
    if (n < 3) throw InvalidInput("correction sums require n >= 3");
    if (k < 1 || k > n - 1) throw IndexError("split index must lie in [1, n-1]");
}

long long factor_for(GammaKind kind, long long n, long long i) {
    switch (kind) {
    case GammaKind::gamma1: return n - i;
    case GammaKind::gamma2: return i - 1;
    case GammaKind::gamma3: return (n - i) * (i - 1);
    }
    return 0;
}

// Term magnitudes stay below n^4 and the total below n^5, so 64-bit
// accumulation is exact well past any n used in practice.
constexpr int kInt64SafeN = 6000;

long long gamma_sum_i64(int n, int k, GammaKind kind) {
    long long acc = 0;
    for (long long i = 1; i <= k; ++i) acc += (k - i) * (k - i) * factor_for(kind, n, i);
    for (long long i = k + 1; i <= n; ++i)
        acc += (i - k - 1) * (i - k - 1) * factor_for(kind, n, i);
    return acc;
}

BigInt gamma_sum_big(int n, int k, GammaKind kind) {
    auto factor = [&](BigInt i) -> BigInt {
        switch (kind) {
        case GammaKind::gamma1: return n - i;
        case GammaKind::gamma2: return i - 1;
        case GammaKind::gamma3: return (n - i) * (i - 1);
        }
        return 0;
    };
    BigInt acc = 0;
    for (int i = 1; i <= k; ++i) acc += BigInt(k - i) * (k - i) * factor(i);
    for (int i = k + 1; i <= n; ++i) acc += BigInt(i - k - 1) * (i - k - 1) * factor(i);
    return acc;
}

void require_n3(int n) {
    if (n < 3) throw InvalidInput("integer refinements require n >= 3");
}

const Sample& require_distinct(const Sample& s) {
    require_n3(s.size());
    if (!s.distinct_integers())
        throw RequiresDistinctIntegers("sample is not n pairwise distinct integers");
    return s;
}

Assumptions integer_assumptions(bool integer_mean = false) {
    Assumptions a;
    a.distinct_integers = true;
    a.integer_mean = integer_mean;
    a.n_min = 3;
    return a;
}

} // namespace

BigInt gamma_sum(int n, int k, GammaKind kind) {
    require_gamma_domain(n, k);
    if (n <= kInt64SafeN) return gamma_sum_i64(n, k, kind);
    return gamma_sum_big(n, k, kind);
}

BetaCorrection beta_correction(int n) {
    require_n3(n);
    static std::mutex cache_mutex;
    static std::map<int, BetaCorrection> cache;
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }

    BetaCorrection out;
    out.n = n;
    BigInt min1, min2, min3;
    for (int k = 1; k <= n - 1; ++k) {
        BigInt g1 = gamma_sum(n, k, GammaKind::gamma1);
        BigInt g2 = gamma_sum(n, k, GammaKind::gamma2);
        BigInt g3 = gamma_sum(n, k, GammaKind::gamma3);
        if (k == 1 || g1 < min1) min1 = g1, out.argmin_gamma1 = k;
        if (k == 1 || g2 < min2) min2 = g2, out.argmin_gamma2 = k;
        if (k == 1 || g3 < min3) min3 = g3, out.argmin_gamma3 = k;
    }
    out.beta1 = BigRat(min1, n);
    out.beta2 = BigRat(min3, n);

    std::lock_guard lock(cache_mutex);
    cache.emplace(n, out);
    return out;
}

BigRat beta1(int n) { return beta_correction(n).beta1; }
BigRat beta2(int n) { return beta_correction(n).beta2; }

long long floor_of_largest_root(double b, double c) {
    if (!(b >= 0.0) || !(c >= 0.0) || !std::isfinite(b) || !std::isfinite(c))
        throw InvalidInput("coefficients must be finite and nonnegative");
    auto p = [&](long double x) { return x * x + b * x - c; };
    long double root = (-static_cast<long double>(b) + std::sqrt(static_cast<long double>(b) * b + 4.0L * c)) / 2.0L;
    long long t = static_cast<long long>(std::floor(root));
    if (t < 0) t = 0;
    // Nudge across any rounding of the root against the sign of p itself:
    // the floor is the largest integer left of the positive root.
    for (int i = 0; i < 2 && p(t) > 0.0L; ++i) --t;
    for (int i = 0; i < 2 && p(t + 1) < 0.0L; ++i) ++t;
    if (p(t) > 0.0L || p(t + 1) < 0.0L)
        throw Error("floor_of_largest_root could not certify its result");
    return t;
}

long long floor_of_smallest_root(double b, double c) {
    if (!(b >= 0.0) || !(c >= 0.0) || !std::isfinite(b) || !std::isfinite(c))
        throw InvalidInput("coefficients must be finite and nonnegative");
    long double disc = static_cast<long double>(b) * b - 4.0L * c;
    if (disc < 0.0L) throw InvalidInput("quadratic has no real roots");
    auto g = [&](long double x) { return x * x - b * x + c; }; // -p(x)
    long double root = (static_cast<long double>(b) - std::sqrt(disc)) / 2.0L;
    long long t = static_cast<long long>(std::floor(root));
    for (int i = 0; i < 2 && g(t) < 0.0L; ++i) --t;           // t slipped past the root
    long double vertex = static_cast<long double>(b) / 2.0L;
    for (int i = 0; i < 2 && t + 1 <= vertex && g(t + 1) > 0.0L; ++i) ++t;
    if (g(t) < 0.0L) throw Error("floor_of_smallest_root could not certify its result");
    // The companion condition g(t+1) <= 0 places t+1 between the roots; it is
    // a sufficient test only, and genuinely fails whenever the two roots lie
    // strictly inside one unit interval. Certify it only when the root gap
    // admits it.
    if (disc >= 1.0L && g(t + 1) > 0.0L)
        throw Error("floor_of_smallest_root could not certify its result");
    return t;
}

BoundEntry m3_raw_bounds_refined(const Sample& s) {
    require_distinct(s);
    const BoundEntry& raw = sharma_m3_bounds(s)[0];
    double b1 = to_double(beta1(s.size()));
    BoundEntry e;
    e.id = "m3-raw-refined";
    e.eq_tag = "2t1";
    e.kind = BoundKind::two_sided;
    e.target = BoundTarget::m3_raw;
    e.lower = raw.lower + b1;
    e.upper = raw.upper - b1;
    e.assumptions = integer_assumptions();
    e.refines = "sharma-m3-raw";
    return e;
}

std::vector<BoundEntry> m3_central_bounds_refined(const Sample& s) {
    require_distinct(s);
    auto base = sharma_m3_bounds(s);
    double b1 = to_double(beta1(s.size()));

    BoundEntry c1;
    c1.id = "m3-central-refined";
    c1.eq_tag = "c1";
    c1.kind = BoundKind::two_sided;
    c1.target = BoundTarget::m3;
    c1.lower = base[1].lower + b1;
    c1.upper = base[1].upper - b1;
    c1.assumptions = integer_assumptions();
    c1.refines = "sharma-m3-central";

    BoundEntry c2;
    c2.id = "m3-box-refined";
    c2.eq_tag = "c3";
    c2.kind = BoundKind::two_sided;
    c2.target = BoundTarget::m3;
    c2.lower = base[2].lower + b1;
    c2.upper = base[2].upper - b1;
    c2.assumptions = integer_assumptions();
    c2.refines = "sharma-m3-box";

    return {c1, c2};
}

std::vector<BoundEntry> m3_spread_inequalities(const Sample& s) {
    require_distinct(s);
    int n = s.size();
    double m2 = central_moment(s, 2);
    if (m2 <= 0.0) throw DegenerateSample("positive variance required");
    double m3 = central_moment(s, 3);
    double range = s.max() - s.min();
    double b1 = to_double(beta1(n));

    BoundEntry quad;
    quad.id = "m3-quadratic-refined";
    quad.eq_tag = "3c1";
    quad.kind = BoundKind::check;
    quad.target = BoundTarget::check;
    quad.check_lhs = m2 + int_pow((m3 + b1) / (2.0 * m2), 2);
    quad.check_rhs = range * range / 4.0;
    quad.holds = quad.check_lhs <= quad.check_rhs;
    quad.assumptions = integer_assumptions();
    quad.refines = "sharma-m3-quadratic";

    BoundEntry quad_spread;
    quad_spread.id = "spread-from-m3-quadratic";
    quad_spread.eq_tag = "3c1";
    quad_spread.kind = BoundKind::lower;
    quad_spread.target = BoundTarget::spread;
    quad_spread.lower = 2.0 * std::sqrt(quad.check_lhs);
    quad_spread.assumptions = integer_assumptions();
    quad_spread.refines = "sharma-m3-quadratic";
    quad_spread.note = "range form of the quadratic check";

    BoundEntry abs3;
    abs3.id = "m3-abs-refined";
    abs3.eq_tag = "4c1";
    abs3.kind = BoundKind::check;
    abs3.target = BoundTarget::check;
    abs3.check_lhs = std::abs(m3 + b1);
    abs3.check_rhs = int_pow(range, 3) / (6.0 * std::sqrt(3.0));
    abs3.holds = abs3.check_lhs <= abs3.check_rhs;
    abs3.assumptions = integer_assumptions();
    abs3.refines = "sharma-m3-abs";

    BoundEntry abs_spread;
    abs_spread.id = "spread-from-m3-abs";
    abs_spread.eq_tag = "4c1";
    abs_spread.kind = BoundKind::lower;
    abs_spread.target = BoundTarget::spread;
    abs_spread.lower = std::cbrt(6.0 * std::sqrt(3.0) * abs3.check_lhs);
    abs_spread.assumptions = integer_assumptions();
    abs_spread.refines = "sharma-m3-abs";
    abs_spread.note = "range form of the cubic check";

    return {quad, quad_spread, abs3, abs_spread};
}

BoundEntry m4_upper_refined(const Sample& s) {
    require_distinct(s);
    const BoundEntry& it3 = sharma_m4_upper(s)[0];
    BoundEntry e;
    e.id = "m4-upper-refined";
    e.eq_tag = "3t11";
    e.kind = BoundKind::upper;
    e.target = BoundTarget::m4;
    e.assumptions = integer_assumptions();
    e.refines = "sharma-m4";
    if (!it3.applicable) {
        e.applicable = false;
        e.note = it3.note;
        return e;
    }
    e.upper = it3.upper - to_double(beta2(s.size()));
    return e;
}

BoundEntry m4_combo_upper_refined(const Sample& s) {
    require_distinct(s);
    double m2 = central_moment(s, 2);
    if (m2 <= 0.0) throw DegenerateSample("positive variance required");
    double range = s.max() - s.min();
    BoundEntry e;
    e.id = "m4-combo-refined";
    e.eq_tag = "5c1";
    e.kind = BoundKind::upper;
    e.target = BoundTarget::m4_combo;
    e.upper = int_pow(range, 4) / 64.0 - to_double(beta2(s.size()));
    e.assumptions = integer_assumptions();
    e.refines = "sharma-m4-combo";
    return e;
}

BigRat m4_count_floor(int n, bool integer_mean) {
    require_n3(n);
    BigInt best;
    bool first = true;
    int k_hi = integer_mean ? n : n - 1;
    for (int k = 1; k <= k_hi; ++k) {
        BigInt v = fourth_power_sum(k - 1) +
                   fourth_power_sum(integer_mean ? n - k : n - k - 1);
        if (first || v < best) best = v, first = false;
    }
    return BigRat(best, n);
}

BigRat m4_range_correction(int n, bool integer_mean) {
    require_n3(n);
    BigInt best;
    bool first = true;
    int k_hi = integer_mean ? n : n - 1;
    for (int k = 1; k <= k_hi; ++k) {
        BigInt v = fourth_power_sum(k - 2) +
                   fourth_power_sum(integer_mean ? n - k - 1 : n - k - 2);
        if (first || v < best) best = v, first = false;
    }
    return BigRat(best, n);
}

BoundEntry m4_lower_count_only(int n, bool integer_mean) {
    BoundEntry e;
    e.id = "m4-count-lower";
    e.eq_tag = integer_mean ? "4t2" : "4t1";
    e.kind = BoundKind::lower;
    e.target = BoundTarget::m4;
    e.lower = to_double(m4_count_floor(n, integer_mean));
    e.assumptions = integer_assumptions(integer_mean);
    e.with_param("n", n);
    return e;
}

BoundEntry m4_lower_with_range(const Sample& s) {
    require_distinct(s);
    int n = s.size();
    bool im = s.integer_mean();
    double range = s.max() - s.min();
    BoundEntry e;
    e.id = "m4-range-lower";
    e.eq_tag = im ? "5t2" : "5t1";
    e.kind = BoundKind::lower;
    e.target = BoundTarget::m4;
    e.lower = int_pow(range, 4) / (8.0 * n) + to_double(m4_range_correction(n, im));
    e.assumptions = integer_assumptions(im);
    e.refines = "sharma-m2r";
    e.with_param("r", 2);
    return e;
}

} // namespace mbounds
