#ifndef MBOUNDS_BOUNDS_HPP
#define MBOUNDS_BOUNDS_HPP

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mbounds {

enum class BoundKind { lower, upper, two_sided, check };

/// What quantity an entry constrains.
enum class BoundTarget {
    m2r,      ///< 2r-th central moment (r carried in params)
    m3,       ///< third central moment
    m3_raw,   ///< third raw moment
    m4,       ///< fourth central moment
    m4_combo, ///< m4 - m2^2 - m3^2/m2
    x_j,      ///< j-th largest value / eigenvalue / root
    x_kj,     ///< segment mean of the k-th..j-th largest values
    d_j,      ///< j-th absolute deviation |x_j - mean|
    spread,   ///< largest eigenvalue difference
    span,     ///< largest root difference
    check     ///< boolean inequality check (lhs/rhs recorded)
};

const char* to_string(BoundKind k) noexcept;
const char* to_string(BoundTarget t) noexcept;

/// Hypotheses a bound relies on beyond the sample itself.
struct Assumptions {
    bool distinct_integers = false;
    bool integer_mean = false;
    int n_min = 0;
};

/// One computed inequality: an interval endpoint pair, a one-sided bound, or a
/// lhs <= rhs check. `eq_tag` is an opaque citation tag for reports; `refines`
/// names the baseline entry a refined bound tightens.
struct BoundEntry {
    std::string id;
    std::string eq_tag;
    BoundKind kind = BoundKind::two_sided;
    BoundTarget target = BoundTarget::x_j;

    double lower = std::numeric_limits<double>::quiet_NaN();
    double upper = std::numeric_limits<double>::quiet_NaN();

    /// For kind == check. `check_relation` is the comparison asserted between
    /// lhs and rhs ("<=" or ">="); `holds` records whether it came out true.
    double check_lhs = std::numeric_limits<double>::quiet_NaN();
    double check_rhs = std::numeric_limits<double>::quiet_NaN();
    std::string check_relation = "<=";
    std::optional<bool> holds;

    /// False when a precondition fails in a flagged-not-fatal way
    /// (e.g. a vanishing denominator); values are then meaningless.
    bool applicable = true;

    Assumptions assumptions;
    std::string refines;
    std::string note;

    /// Integer parameters such as j, k, r, q, n.
    std::vector<std::pair<std::string, long long>> params;

    BoundEntry& with_param(std::string key, long long v) {
        params.emplace_back(std::move(key), v);
        return *this;
    }
};

} // namespace mbounds

#endif
