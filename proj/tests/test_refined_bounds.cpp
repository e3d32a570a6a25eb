#include "doctest.h"

#include <cmath>

#include "mbounds/classic_bounds.hpp"
#include "mbounds/errors.hpp"
#include "mbounds/refined_bounds.hpp"
#include "mbounds/sample.hpp"

using namespace mbounds;

namespace {
const Sample kT{10, 9, 8, 6, 5, 4, 3, 2, 1};
const Sample kS{10, 9, 8, 2, 1};
}

TEST_CASE("order-statistic radii pin the trivial ends exactly") {
    double m2 = 80.0 / 9.0;
    OrderStatRadii first = order_stat_radii(9, 1, 1, m2);
    CHECK(first.lower == 0.0);
    CHECK(first.upper > 0.0);
    OrderStatRadii last = order_stat_radii(9, 9, 1, m2);
    CHECK(last.upper == 0.0);
    CHECK(last.lower > 0.0);

    // Symmetric middle index: both radii are sqrt(m2 * 4/5) = 8/3.
    OrderStatRadii mid = order_stat_radii(9, 5, 1, m2);
    CHECK(mid.lower == doctest::Approx(8.0 / 3.0).epsilon(1e-13));
    CHECK(mid.upper == doctest::Approx(8.0 / 3.0).epsilon(1e-13));

    CHECK_THROWS_AS(order_stat_radii(9, 0, 1, m2), IndexError);
    CHECK_THROWS_AS(order_stat_radii(9, 1, 0, m2), InvalidInput);
    CHECK_THROWS_AS(order_stat_radii(9, 1, 1, -1.0), InvalidInput);
}

TEST_CASE("r = 1 order intervals coincide with wolkowicz-styan") {
    for (int j = 1; j <= kT.size(); ++j) {
        BoundEntry general = general_order_interval(kT, j, 1);
        BoundEntry ws = ws_interval(kT, j, j);
        CHECK(general.lower == doctest::Approx(ws.lower).epsilon(1e-13));
        CHECK(general.upper == doctest::Approx(ws.upper).epsilon(1e-13));
    }
}

TEST_CASE("fourth-moment order intervals on the reference sample") {
    BoundEntry top = general_order_interval(kT, 1, 2);
    CHECK(top.id == "gen-order");
    CHECK(top.upper == doctest::Approx(11.2340).epsilon(1e-4));
    CHECK(kT.value(1) <= top.upper);

    BoundEntry bottom = general_order_interval(kT, 9, 2);
    CHECK(bottom.lower == doctest::Approx(-0.5674).epsilon(1e-3));
    CHECK(bottom.lower <= kT.value(9));

    for (int j = 1; j <= kT.size(); ++j)
        for (int r = 1; r <= 3; ++r) {
            BoundEntry e = general_order_interval(kT, j, r);
            CHECK(e.lower <= kT.value(j));
            CHECK(kT.value(j) <= e.upper);
        }
}

TEST_CASE("the r = 2 upper endpoint is attained by one high value over equals") {
    Sample s{3, 1, 1, 1};
    BoundEntry e = general_order_interval(s, 1, 2);
    CHECK(e.upper == doctest::Approx(3.0).epsilon(1e-12));
    BoundEntry e1 = general_order_interval(s, 1, 1);
    CHECK(e1.upper == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("segment intervals cover segment means") {
    BoundEntry seg = general_segment_interval(kT, 1, 3, 1);
    CHECK(seg.id == "gen-segment");
    double sm = segment_mean(kT, 1, 3);
    CHECK(seg.lower <= sm);
    CHECK(sm <= seg.upper);

    BoundEntry deep = general_segment_interval(kT, 2, 7, 3);
    CHECK(deep.applicable);
    double sm27 = segment_mean(kT, 2, 7);
    CHECK(deep.lower <= sm27);
    CHECK(sm27 <= deep.upper);
}

TEST_CASE("the full-range segment degenerates at r = 1 and is refused for r >= 2") {
    BoundEntry whole = general_segment_interval(kT, 1, 9, 1);
    CHECK(whole.applicable);
    CHECK(whole.lower == doctest::Approx(mean(kT)).epsilon(1e-14));
    CHECK(whole.upper == doctest::Approx(mean(kT)).epsilon(1e-14));

    BoundEntry refused = general_segment_interval(kT, 1, 9, 2);
    CHECK_FALSE(refused.applicable);
    CHECK_FALSE(refused.note.empty());
    CHECK_FALSE(general_segment_interval(kT, 1, 9, 3).applicable);
}

TEST_CASE("piecewise moment lower bound, both branches") {
    // x_5 below the mean on the five-point set: 13/64 * 5^4.
    BoundEntry low = m2r_lower_piecewise(kS, 5, 2);
    CHECK(low.id == "m2r-piecewise");
    CHECK(low.lower == doctest::Approx(126.953125).epsilon(1e-13));
    CHECK(low.lower <= central_moment(kS, 4));

    // x_4 also sits below the mean but uses the interior coefficient.
    BoundEntry interior = m2r_lower_piecewise(kS, 4, 2);
    CHECK(interior.lower == doctest::Approx(3584.0 / 27.0).epsilon(1e-12));
    CHECK(interior.lower <= central_moment(kS, 4));

    // Above the mean it reproduces the order-statistic baseline at j = 1.
    BoundEntry top = m2r_lower_piecewise(kT, 1, 1);
    CHECK(top.lower ==
          doctest::Approx(sharma_saini_m2r_lower(kT, 1, 1).lower).epsilon(1e-13));
}

TEST_CASE("piecewise bound never exceeds the moment it bounds") {
    for (int j = 1; j <= kT.size(); ++j)
        for (int r = 1; r <= 3; ++r) {
            BoundEntry e = m2r_lower_piecewise(kT, j, r);
            CHECK(e.lower <= central_moment(kT, 2 * r) * (1.0 + 1e-12));
        }
}

TEST_CASE("absolute deviation upper bound is the larger radius") {
    BoundEntry mid = abs_deviation_upper(kT, 5, 1);
    CHECK(mid.id == "abs-deviation");
    CHECK(mid.kind == BoundKind::upper);
    CHECK(mid.upper == doctest::Approx(8.0 / 3.0).epsilon(1e-13));
    CHECK(std::abs(kT.value(5) - mean(kT)) <= mid.upper);

    Sample s{3, 1, 1, 1};
    BoundEntry e = abs_deviation_upper(s, 1, 1);
    CHECK(e.upper == doctest::Approx(1.5).epsilon(1e-13));
}

TEST_CASE("moment order cap is enforced and adjustable") {
    int old_cap = max_moment_order();
    CHECK(old_cap >= 3);
    CHECK_THROWS_AS(general_order_interval(kT, 1, old_cap + 1), InvalidInput);
    set_max_moment_order(old_cap + 1);
    CHECK_NOTHROW(general_order_interval(kT, 1, old_cap + 1));
    set_max_moment_order(old_cap);
    CHECK_THROWS_AS(set_max_moment_order(0), InvalidInput);
}

TEST_CASE("index validation") {
    CHECK_THROWS_AS(general_order_interval(kT, 0, 1), IndexError);
    CHECK_THROWS_AS(general_order_interval(kT, 10, 1), IndexError);
    CHECK_THROWS_AS(general_segment_interval(kT, 5, 4, 1), IndexError);
    CHECK_THROWS_AS(abs_deviation_upper(kT, 0, 1), IndexError);
}
