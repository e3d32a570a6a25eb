#include "mbounds/classic_bounds.hpp"

#include <cmath>

#include "mbounds/errors.hpp"
#include "mbounds/refined_bounds.hpp"
#include "mbounds/summation.hpp"

namespace mbounds {
namespace {

void require_n2(const Sample& s) {
    if (s.size() < 2) throw DegenerateSample("bound requires at least two values");
}

void require_order(int r) {
    if (r < 1) throw InvalidInput("moment order must be positive");
    if (r > max_moment_order()) throw InvalidInput("moment order exceeds the configured cap");
}

} // namespace

BoundEntry samuelson_interval(const Sample& s, int j) {
    require_n2(s);
    if (j < 1 || j > s.size()) throw IndexError("order statistic index out of range");
    double xbar = mean(s);
    double radius = std::sqrt((s.size() - 1) * central_moment(s, 2));
    BoundEntry e;
    e.id = "samuelson";
    e.eq_tag = "iew1";
    e.kind = BoundKind::two_sided;
    e.target = BoundTarget::x_j;
    e.lower = xbar - radius;
    e.upper = xbar + radius;
    e.with_param("j", j);
    return e;
}

BoundEntry ws_interval(const Sample& s, int k, int j) {
    int n = s.size();
    if (k < 1 || j < k || j > n) throw IndexError("segment indices out of range");
    double xbar = mean(s);
    double sigma = std::sqrt(central_moment(s, 2));
    BoundEntry e;
    e.id = k == j ? "ws-order" : "ws-segment";
    e.eq_tag = k == j ? "ine3" : "ieq4";
    e.kind = BoundKind::two_sided;
    e.target = k == j ? BoundTarget::x_j : BoundTarget::x_kj;
    e.lower = xbar - std::sqrt(double(k - 1) / (n - k + 1)) * sigma;
    e.upper = xbar + std::sqrt(double(n - j) / j) * sigma;
    if (k != j) e.with_param("k", k);
    e.with_param("j", j);
    return e;
}

BoundEntry nagy_m2_lower(const Sample& s) {
    require_n2(s);
    double range = s.max() - s.min();
    BoundEntry e;
    e.id = "nagy";
    e.eq_tag = "i2";
    e.kind = BoundKind::lower;
    e.target = BoundTarget::m2r;
    e.lower = range * range / (2.0 * s.size());
    e.with_param("r", 1);
    return e;
}

BoundEntry sharma_m2r_lower(const Sample& s, int r) {
    require_n2(s);
    require_order(r);
    double range = s.max() - s.min();
    BoundEntry e;
    e.id = "sharma-m2r";
    e.eq_tag = "i3";
    e.kind = BoundKind::lower;
    e.target = BoundTarget::m2r;
    e.lower = int_pow(range, 2 * r) / (int_pow(2.0, 2 * r - 1) * s.size());
    e.with_param("r", r);
    return e;
}

BoundEntry sharma_saini_m2r_lower(const Sample& s, int r, int j) {
    require_n2(s);
    require_order(r);
    int n = s.size();
    if (j < 1 || j > n) throw IndexError("order statistic index out of range");
    double dev = s.value(j) - mean(s);
    double w = int_pow(double(n - 1), 2 * r - 1);
    BoundEntry e;
    e.id = "sharma-saini";
    e.eq_tag = "m2";
    e.kind = BoundKind::lower;
    e.target = BoundTarget::m2r;
    e.lower = (1.0 + w) / (n * w) * int_pow(dev, 2 * r);
    e.with_param("r", r).with_param("j", j);
    return e;
}

std::vector<BoundEntry> sharma_m3_bounds(const Sample& s) {
    require_n2(s);
    double xbar = mean(s);
    double M = s.max(), m = s.min();
    if (!(M > xbar) || !(xbar > m))
        throw DegenerateSample("third-moment bounds need a non-constant sample");
    double m2 = central_moment(s, 2);
    double m2p = raw_moment(s, 2);

    std::vector<BoundEntry> out;

    BoundEntry raw;
    raw.id = "sharma-m3-raw";
    raw.eq_tag = "it1";
    raw.kind = BoundKind::two_sided;
    raw.target = BoundTarget::m3_raw;
    raw.lower = (m * m * xbar * xbar - m * (m + xbar) * m2p + m2p * m2p) / (xbar - m);
    raw.upper = (M * (M + xbar) * m2p - M * M * xbar * xbar - m2p * m2p) / (M - xbar);
    out.push_back(raw);

    // Central form of the same interval; algebra collapses the raw-moment
    // conversion to quotients in m2 alone.
    BoundEntry central;
    central.id = "sharma-m3-central";
    central.eq_tag = "it1";
    central.kind = BoundKind::two_sided;
    central.target = BoundTarget::m3;
    central.lower = (m2 * m2 - (xbar - m) * (xbar - m) * m2) / (xbar - m);
    central.upper = ((M - xbar) * (M - xbar) * m2 - m2 * m2) / (M - xbar);
    central.note = "central-moment form of the raw interval";
    out.push_back(central);

    BoundEntry box;
    box.id = "sharma-m3-box";
    box.eq_tag = "2.25raj20";
    box.kind = BoundKind::two_sided;
    box.target = BoundTarget::m3;
    box.lower = -int_pow(xbar - m, 3) / 4.0;
    box.upper = int_pow(M - xbar, 3) / 4.0;
    out.push_back(box);

    double m3 = central_moment(s, 3);
    double range = M - m;

    BoundEntry quad;
    quad.id = "sharma-m3-quadratic";
    quad.eq_tag = "2.2raj10";
    quad.kind = BoundKind::check;
    quad.target = BoundTarget::check;
    quad.check_lhs = m2 + int_pow(m3 / (2.0 * m2), 2);
    quad.check_rhs = range * range / 4.0;
    quad.holds = quad.check_lhs <= quad.check_rhs;
    out.push_back(quad);

    BoundEntry abs3;
    abs3.id = "sharma-m3-abs";
    abs3.eq_tag = "2.6raj18";
    abs3.kind = BoundKind::check;
    abs3.target = BoundTarget::check;
    abs3.check_lhs = std::abs(m3);
    abs3.check_rhs = int_pow(range, 3) / (6.0 * std::sqrt(3.0));
    abs3.holds = abs3.check_lhs <= abs3.check_rhs;
    out.push_back(abs3);

    return out;
}

std::vector<BoundEntry> sharma_m4_upper(const Sample& s) {
    require_n2(s);
    double xbar = mean(s);
    double M = s.max(), m = s.min();
    double m2 = central_moment(s, 2);
    if (m2 <= 0.0) throw DegenerateSample("fourth-moment bounds need positive variance");
    double m3 = central_moment(s, 3);

    std::vector<BoundEntry> out;

    BoundEntry it3;
    it3.id = "sharma-m4";
    it3.eq_tag = "it3";
    it3.kind = BoundKind::upper;
    it3.target = BoundTarget::m4;
    double denom = (M - xbar) * (xbar - m) - m2;
    // The gap (M-xbar)(xbar-m) - m2 is zero exactly when the sample has
    // two-point support; near zero the quotient below is numerically
    // worthless, so refuse slightly early rather than emit garbage.
    if (denom <= 1e-12 * ((M - xbar) * (xbar - m) + m2)) {
        it3.applicable = false;
        it3.note = "vanishing denominator: sample has two-point support";
    } else {
        double cross = m3 - (m + M - 2.0 * xbar) * m2;
        it3.upper = (M - xbar) * (xbar - m) * m2 + (M + m - 2.0 * xbar) * m3 -
                    cross * cross / denom;
    }
    out.push_back(it3);

    BoundEntry it4;
    it4.id = "sharma-m4-combo";
    it4.eq_tag = "it4";
    it4.kind = BoundKind::upper;
    it4.target = BoundTarget::m4_combo;
    it4.upper = int_pow(M - m, 4) / 64.0;
    out.push_back(it4);

    return out;
}

} // namespace mbounds
