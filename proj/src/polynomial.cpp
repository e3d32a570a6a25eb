#include "mbounds/polynomial.hpp"

#include <cmath>

#include "mbounds/errors.hpp"
#include "mbounds/integer_refinements.hpp"
#include "mbounds/refined_bounds.hpp"

namespace mbounds {
namespace {

constexpr const char* kIntegerRootsNote = "assumes n distinct integer roots";

void require_all_finite(std::span<const double> v) {
    for (double x : v)
        if (!std::isfinite(x)) throw InvalidValue("coefficients must be finite");
}

} // namespace

DepressedPolynomial::DepressedPolynomial(int degree, std::span<const double> trailing)
    : degree_(degree) {
    if (degree < 2) throw InvalidInput("polynomial degree must be at least 2");
    if (static_cast<int>(trailing.size()) > degree - 1)
        throw InvalidInput("too many coefficients for the stated degree");
    require_all_finite(trailing);
    b_.assign(trailing.begin(), trailing.end());
    b_.resize(static_cast<size_t>(degree - 1), 0.0);
}

double DepressedPolynomial::b(int i) const {
    if (i < 2 || i > degree_) throw IndexError("coefficient index out of range");
    return b_[static_cast<size_t>(i - 2)];
}

std::vector<double> DepressedPolynomial::monic_coefficients() const {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(degree_) + 1);
    out.push_back(1.0);
    out.push_back(0.0);
    out.insert(out.end(), b_.begin(), b_.end());
    return out;
}

Depressed depress(std::span<const double> trailing) {
    int n = static_cast<int>(trailing.size());
    if (n < 2) throw InvalidInput("polynomial degree must be at least 2");
    require_all_finite(trailing);
    double shift = trailing[0] / n; // x -> x - a1/n moves each root by +a1/n

    // Taylor shift by repeated synthetic division: dividing by (x + shift)
    // over and over leaves the coefficients of f(y - shift) as remainders,
    // lowest order first.
    std::vector<double> coeff;
    coeff.reserve(static_cast<size_t>(n) + 1);
    coeff.push_back(1.0);
    coeff.insert(coeff.end(), trailing.begin(), trailing.end());
    std::vector<double> d(static_cast<size_t>(n) + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        for (int i = 1; i <= n - k; ++i) coeff[static_cast<size_t>(i)] -= shift * coeff[static_cast<size_t>(i - 1)];
        d[static_cast<size_t>(k)] = coeff[static_cast<size_t>(n - k)];
    }
    // d[k] is the coefficient of y^k; d[n-1] vanishes by construction and
    // d[n] is the leading 1.
    std::vector<double> tail(static_cast<size_t>(n - 1), 0.0);
    for (int i = 2; i <= n; ++i) tail[static_cast<size_t>(i - 2)] = d[static_cast<size_t>(n - i)];
    return Depressed{shift, DepressedPolynomial(n, tail)};
}

PolyMoments poly_moments(const DepressedPolynomial& p) {
    int n = p.degree();
    double b2 = p.b(2);
    if (b2 > 0.0) throw NotAllRootsReal("sum of squared roots would be negative (b2 > 0)");
    PolyMoments m;
    m.m2 = -2.0 * b2 / n;
    if (n >= 3) m.m3 = -3.0 * p.b(3) / n;
    if (n >= 4) {
        m.m4 = 2.0 * (b2 * b2 - 2.0 * p.b(4)) / n;
        if (m.m4 < 0.0) throw NotAllRootsReal("fourth moment of the roots would be negative");
    } else {
        // Power-sum identity with the absent coefficients taken as zero:
        // p4 = 2 b2^2, so m4 = b2^2 for n = 2 and 2 b2^2 / 3 for n = 3.
        m.m4 = 2.0 * b2 * b2 / n;
    }
    return m;
}

BoundEntry root_interval(const DepressedPolynomial& p, int j, int r) {
    int n = p.degree();
    if (j < 1 || j > n) throw IndexError("root index out of range");
    if (r != 1 && r != 2) throw InvalidInput("root intervals support r in {1, 2}");
    if (r == 2 && n < 5) throw InvalidInput("r = 2 root intervals require degree >= 5");
    PolyMoments m = poly_moments(p);
    double m2r = r == 1 ? m.m2 : m.m4;
    OrderStatRadii rad = order_stat_radii(n, j, r, m2r);

    BoundEntry e;
    e.id = "root-interval";
    e.eq_tag = r == 1 ? "ipe3" : "pe2";
    e.kind = BoundKind::two_sided;
    e.target = BoundTarget::x_j;
    e.lower = -rad.lower;
    e.upper = rad.upper;
    e.note = "valid when all roots are real";
    e.with_param("j", j).with_param("r", r);
    return e;
}

BoundEntry integer_roots_necessary(const DepressedPolynomial& p) {
    int n = p.degree();
    if (n < 3) throw InvalidInput("the integer-root condition requires degree >= 3");
    double b2 = p.b(2);
    double b4 = n >= 4 ? p.b(4) : 0.0;

    BoundEntry e;
    e.id = "integer-roots-necessary";
    e.eq_tag = "p4t2";
    e.kind = BoundKind::check;
    e.target = BoundTarget::check;
    e.check_lhs = b2 * b2 - 2.0 * b4;
    e.check_rhs = to_double(m4_count_floor(n, true)) * n / 2.0;
    e.check_relation = ">=";
    e.holds = e.check_lhs >= e.check_rhs;
    e.note = "a failed check certifies the roots are not n distinct integers";
    e.with_param("n", n);
    return e;
}

std::vector<BoundEntry> span_bounds(const DepressedPolynomial& p,
                                    const IntegerRootsClaim& claim) {
    int n = p.degree();
    if (n < 3) throw InvalidInput("span bounds require degree >= 3");
    PolyMoments m = poly_moments(p);
    if (m.m2 <= 0.0) throw DegenerateSample("all roots coincide (m2 = 0)");
    double combo = m.m4 - m.m2 * m.m2 - m.m3 * m.m3 / m.m2;
    if (combo < 0.0) combo = 0.0;

    std::vector<BoundEntry> out;

    BoundEntry nagy;
    nagy.id = "span-nagy";
    nagy.eq_tag = "i2";
    nagy.kind = BoundKind::upper;
    nagy.target = BoundTarget::span;
    nagy.upper = std::sqrt(2.0 * n * m.m2);
    out.push_back(nagy);

    BoundEntry sharma;
    sharma.id = "span-sharma-m4";
    sharma.eq_tag = "i3";
    sharma.kind = BoundKind::upper;
    sharma.target = BoundTarget::span;
    sharma.upper = std::pow(8.0 * n * m.m4, 0.25);
    sharma.with_param("r", 2);
    out.push_back(sharma);

    BoundEntry lower;
    lower.id = "span-combo-lower";
    lower.eq_tag = "it4";
    lower.kind = BoundKind::lower;
    lower.target = BoundTarget::span;
    lower.lower = std::pow(64.0 * combo, 0.25);
    out.push_back(lower);

    if (!claim.distinct_integer_roots) return out;

    bool im = claim.integer_mean;
    double c = to_double(m4_range_correction(n, im));

    BoundEntry up;
    up.id = "span-upper-refined";
    up.eq_tag = "p4t2";
    up.kind = BoundKind::upper;
    up.target = BoundTarget::span;
    up.assumptions.distinct_integers = true;
    up.assumptions.integer_mean = im;
    up.assumptions.n_min = 3;
    up.refines = "span-sharma-m4";
    up.note = kIntegerRootsNote;
    double radicand = 8.0 * n * (m.m4 - c);
    if (radicand < 0.0) {
        up.applicable = false;
        up.note = "fourth moment is below the distinct-integer floor, "
                  "so the roots cannot be n distinct integers";
    } else {
        up.upper = std::pow(radicand, 0.25);
    }
    out.push_back(up);

    BoundEntry low;
    low.id = "span-lower-refined";
    low.eq_tag = "p4t3";
    low.kind = BoundKind::lower;
    low.target = BoundTarget::span;
    low.lower = std::pow(64.0 * (combo + to_double(beta2(n))), 0.25);
    low.assumptions.distinct_integers = true;
    low.assumptions.integer_mean = im;
    low.assumptions.n_min = 3;
    low.refines = "span-combo-lower";
    low.note = kIntegerRootsNote;
    out.push_back(low);

    return out;
}

} // namespace mbounds
