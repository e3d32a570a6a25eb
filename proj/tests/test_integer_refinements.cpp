#include "doctest.h"

#include <cmath>

#include "mbounds/classic_bounds.hpp"
#include "mbounds/errors.hpp"
#include "mbounds/integer_refinements.hpp"
#include "mbounds/sample.hpp"

using namespace mbounds;

namespace {
const Sample kT{10, 9, 8, 6, 5, 4, 3, 2, 1};
}

TEST_CASE("correction sums at known points") {
    CHECK(gamma_sum(9, 3, GammaKind::gamma1) == 89);
    CHECK(gamma_sum(9, 1, GammaKind::gamma3) == 1008);
    CHECK(gamma_sum(9, 4, GammaKind::gamma3) == 166);
    CHECK(gamma_sum(5, 2, GammaKind::gamma3) == 3);
    CHECK(gamma_sum(4, 1, GammaKind::gamma1) == 1);
    CHECK(gamma_sum(4, 1, GammaKind::gamma3) == 2);
    CHECK(gamma_sum(4, 2, GammaKind::gamma3) == 0);
    CHECK(gamma_sum(4, 3, GammaKind::gamma3) == 2);

    CHECK_THROWS_AS(gamma_sum(2, 1, GammaKind::gamma1), InvalidInput);
    CHECK_THROWS_AS(gamma_sum(5, 0, GammaKind::gamma1), IndexError);
    CHECK_THROWS_AS(gamma_sum(5, 5, GammaKind::gamma1), IndexError);
}

TEST_CASE("the second correction sum mirrors the first") {
    for (int n = 3; n <= 30; ++n)
        for (int k = 1; k <= n - 1; ++k)
            CHECK(gamma_sum(n, k, GammaKind::gamma2) ==
                  gamma_sum(n, n - k, GammaKind::gamma1));
}

TEST_CASE("beta corrections at known orders") {
    CHECK(beta1(9) == BigRat(89, 9));
    CHECK(beta2(9) == BigRat(166, 9));
    CHECK(beta1(5) == BigRat(1));
    CHECK(beta2(5) == BigRat(3, 5));
    CHECK(beta1(4) == BigRat(1, 4));
    CHECK(beta1(3) == 0);
    CHECK(beta2(3) == 0);
    CHECK(beta2(4) == 0);

    BetaCorrection c = beta_correction(9);
    CHECK(c.argmin_gamma1 == 3);
    CHECK(c.argmin_gamma3 == 4);
    CHECK(c.beta1 == BigRat(89, 9));
}

TEST_CASE("beta values agree with direct minimization of the sums") {
    for (int n = 3; n <= 60; ++n) {
        BigInt min1 = gamma_sum(n, 1, GammaKind::gamma1);
        BigInt min3 = gamma_sum(n, 1, GammaKind::gamma3);
        for (int k = 2; k <= n - 1; ++k) {
            min1 = std::min(min1, gamma_sum(n, k, GammaKind::gamma1));
            min3 = std::min(min3, gamma_sum(n, k, GammaKind::gamma3));
        }
        CHECK(beta1(n) == BigRat(min1) / n);
        CHECK(beta2(n) == BigRat(min3) / n);
    }
}

TEST_CASE("floor of the largest root of x^2 + bx - c") {
    CHECK(floor_of_largest_root(3.0, 10.0) == 2);  // root exactly 2
    CHECK(floor_of_largest_root(0.0, 16.0) == 4);
    CHECK(floor_of_largest_root(1.0, 1.0) == 0);   // (sqrt 5 - 1)/2
    CHECK(floor_of_largest_root(0.0, 0.0) == 0);

    long long t = floor_of_largest_root(2.0, 37.0);
    CHECK(37.0 - double(t) * t - double(t) * 2.0 >= 0.0);
    CHECK(double(t + 1) * (t + 1) + double(t + 1) * 2.0 - 37.0 >= 0.0);

    CHECK_THROWS_AS(floor_of_largest_root(-1.0, 1.0), InvalidInput);
}

TEST_CASE("floor of the smallest root of -x^2 + bx - c") {
    CHECK(floor_of_smallest_root(4.0, 4.0) == 2);  // double root 2
    CHECK(floor_of_smallest_root(5.0, 6.0) == 2);  // roots 2, 3
    CHECK(floor_of_smallest_root(7.0, 10.0) == 2); // roots 2, 5

    // Postconditions hold whenever the two roots are at least 1 apart.
    for (long long b = 1; b <= 12; ++b)
        for (long long c = 0; 4 * c + 1 <= b * b; ++c) {
            long long t = floor_of_smallest_root(double(b), double(c));
            CHECK(double(c) + double(t) * t - double(t) * b >= 0.0);
            CHECK(double(t) * b - double(t + 1) * (t + 1) + double(b) - double(c) >= 0.0);
        }

    CHECK_THROWS_AS(floor_of_smallest_root(3.0, 2.5), InvalidInput);
    CHECK_THROWS_AS(floor_of_smallest_root(-2.0, 1.0), InvalidInput);
}

TEST_CASE("fourth-moment count floors") {
    CHECK(m4_count_floor(9, false) == BigRat(452, 9));
    CHECK(m4_count_floor(9, true) == BigRat(236, 3));
    CHECK(m4_count_floor(5, true) == BigRat(34, 5));
    CHECK(m4_count_floor(4, true) == BigRat(9, 2));
    CHECK(m4_count_floor(3, true) == BigRat(2, 3));
    CHECK(m4_count_floor(3, false) == BigRat(1, 3));
    CHECK_THROWS_AS(m4_count_floor(2, false), InvalidInput);
}

TEST_CASE("range corrections for the m4 lower bound") {
    CHECK(m4_range_correction(9, false) == BigRat(115, 9));
    CHECK(m4_range_correction(5, false) == BigRat(1, 5));
    CHECK(m4_range_correction(5, true) == BigRat(2, 5));
    CHECK(m4_range_correction(4, true) == BigRat(1, 4));
    CHECK(m4_range_correction(3, false) == 0);
    CHECK(m4_range_correction(3, true) == 0);
}

TEST_CASE("count-only m4 floor picks the branch by the integer-mean flag") {
    BoundEntry plain = m4_lower_count_only(9, false);
    CHECK(plain.id == "m4-count-lower");
    CHECK(plain.eq_tag == "4t1");
    CHECK(plain.lower == doctest::Approx(50.22222222).epsilon(1e-8));

    BoundEntry centered = m4_lower_count_only(9, true);
    CHECK(centered.eq_tag == "4t2");
    CHECK(centered.lower == doctest::Approx(236.0 / 3.0).epsilon(1e-12));
    CHECK(centered.lower > plain.lower);
}

TEST_CASE("the {-1,0,1} sample attains the integer-mean count floor") {
    Sample s{1, 0, -1};
    CHECK(central_moment(s, 4) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(to_double(m4_count_floor(3, true)) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("range-based m4 lower bound") {
    BoundEntry e = m4_lower_with_range(kT);
    CHECK(e.id == "m4-range-lower");
    CHECK(e.eq_tag == "5t1"); // mean 16/3 is not an integer
    CHECK(e.lower == doctest::Approx(103.9027778).epsilon(1e-8));
    CHECK(e.lower <= central_moment(kT, 4));

    Sample centered{4, 3, 2, -1}; // mean 2
    BoundEntry c = m4_lower_with_range(centered);
    CHECK(c.eq_tag == "5t2");
    CHECK(c.lower == doctest::Approx(625.0 / 32.0 + 0.25).epsilon(1e-12));
    CHECK(c.lower <= central_moment(centered, 4));
}

TEST_CASE("refined third-moment intervals on the reference sample") {
    BoundEntry raw = m3_raw_bounds_refined(kT);
    CHECK(raw.id == "m3-raw-refined");
    CHECK(raw.lower == doctest::Approx(283.5299145).epsilon(1e-8));
    CHECK(raw.upper == doctest::Approx(308.5873016).epsilon(1e-8));
    CHECK(raw.refines == "sharma-m3-raw");
    double raw3 = raw_moment(kT, 3);
    CHECK(raw.lower <= raw3);
    CHECK(raw3 <= raw.upper);

    std::vector<BoundEntry> central = m3_central_bounds_refined(kT);
    REQUIRE(central.size() == 2);
    CHECK(central[0].id == "m3-central-refined");
    CHECK(central[0].lower == doctest::Approx(-10.3960114).epsilon(1e-7));
    CHECK(central[0].upper == doctest::Approx(14.66137566).epsilon(1e-7));
    CHECK(central[1].id == "m3-box-refined");
    CHECK(central[1].lower == doctest::Approx(-10.4537037).epsilon(1e-7));
    CHECK(central[1].upper == doctest::Approx(15.51851852).epsilon(1e-7));
    double m3 = central_moment(kT, 3);
    for (const BoundEntry& e : central) {
        CHECK(e.lower <= m3);
        CHECK(m3 <= e.upper);
        CHECK(e.assumptions.distinct_integers);
    }
}

TEST_CASE("refined intervals nest inside their baselines") {
    std::vector<BoundEntry> base = sharma_m3_bounds(kT);
    BoundEntry raw = m3_raw_bounds_refined(kT);
    CHECK(raw.lower > base[0].lower);
    CHECK(raw.upper < base[0].upper);

    std::vector<BoundEntry> central = m3_central_bounds_refined(kT);
    CHECK(central[0].lower > base[1].lower);
    CHECK(central[0].upper < base[1].upper);
    CHECK(central[1].lower > base[2].lower);
    CHECK(central[1].upper < base[2].upper);
}

TEST_CASE("spread consequences of the tightened third moment") {
    std::vector<BoundEntry> v = m3_spread_inequalities(kT);
    REQUIRE(v.size() == 4);

    CHECK(v[0].id == "m3-quadratic-refined");
    CHECK(v[0].check_lhs == doctest::Approx(9.505768).epsilon(1e-6));
    CHECK(v[0].check_rhs == doctest::Approx(20.25).epsilon(1e-12));
    CHECK(v[0].holds.value());

    CHECK(v[1].id == "spread-from-m3-quadratic");
    CHECK(v[1].kind == BoundKind::lower);
    CHECK(v[1].lower == doctest::Approx(2.0 * std::sqrt(9.5057684)).epsilon(1e-6));
    CHECK(v[1].lower <= kT.max() - kT.min());

    CHECK(v[2].id == "m3-abs-refined");
    CHECK(v[2].check_lhs == doctest::Approx(377.0 / 27.0).epsilon(1e-10));
    CHECK(v[2].holds.value());

    CHECK(v[3].id == "spread-from-m3-abs");
    CHECK(v[3].lower <= kT.max() - kT.min());
    CHECK(v[3].lower > 0.0);
}

TEST_CASE("refined fourth-moment upper bounds") {
    BoundEntry e = m4_upper_refined(kT);
    CHECK(e.id == "m4-upper-refined");
    CHECK(e.eq_tag == "3t11");
    CHECK(e.upper == doctest::Approx(162.5577342).epsilon(1e-8));
    CHECK(e.refines == "sharma-m4");
    CHECK(central_moment(kT, 4) <= e.upper);
    CHECK(e.upper < sharma_m4_upper(kT)[0].upper);

    BoundEntry combo = m4_combo_upper_refined(kT);
    CHECK(combo.id == "m4-combo-refined");
    CHECK(combo.upper == doctest::Approx(102.515625 - 166.0 / 9.0).epsilon(1e-10));
    double m2 = central_moment(kT, 2);
    double m3 = central_moment(kT, 3);
    double lhs = central_moment(kT, 4) - m2 * m2 - m3 * m3 / m2;
    CHECK(lhs <= combo.upper);
}

TEST_CASE("refinements demand the distinct-integer witness") {
    Sample repeated{3, 1, 1, 1};
    CHECK_THROWS_AS(m3_raw_bounds_refined(repeated), RequiresDistinctIntegers);
    CHECK_THROWS_AS(m4_upper_refined(repeated), RequiresDistinctIntegers);
    CHECK_THROWS_AS(m4_lower_with_range(repeated), RequiresDistinctIntegers);

    Sample fractional{2.5, 1.5, 0.5};
    CHECK_THROWS_AS(m3_central_bounds_refined(fractional), RequiresDistinctIntegers);
}
