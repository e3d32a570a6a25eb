#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "mbounds/errors.hpp"
#include "mbounds/matrix.hpp"
#include "mbounds/oracle.hpp"

using namespace mbounds;
using namespace mbounds::oracle;

TEST_CASE("exhaustive enumeration walks every distinct-integer sample once") {
    long long count = 0;
    std::vector<std::vector<long long>> seen;
    enumerate_distinct_integer_samples(3, -3, 3, [&](std::span<const long long> v) {
        ++count;
        REQUIRE(v.size() == 3);
        CHECK(v[0] > v[1]);
        CHECK(v[1] > v[2]);
        CHECK(v[0] <= 3);
        CHECK(v[2] >= -3);
        seen.emplace_back(v.begin(), v.end());
    });
    CHECK(count == 35); // C(7,3)
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("exact rational moments of the reference sample") {
    std::vector<long long> t{10, 9, 8, 6, 5, 4, 3, 2, 1};
    CHECK(exact_mean(t) == BigRat(16, 3));
    CHECK(exact_central_moment(t, 2) == BigRat(80, 9));
    CHECK(exact_central_moment(t, 3) == BigRat(110, 27));
    CHECK(exact_central_moment(t, 4) == BigRat(3644, 27));
    CHECK(exact_central_moment(t, 1) == 0);
}

TEST_CASE("root isolation on a separable cubic") {
    std::vector<double> p{1, -6, 11, -6}; // (x-1)(x-2)(x-3)
    std::vector<RootBracket> roots = isolate_real_roots(p, 0.0, 4.0);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(roots[1].value == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(roots[2].value == doctest::Approx(3.0).epsilon(1e-9));
    for (const RootBracket& r : roots) {
        CHECK(r.low <= r.value);
        CHECK(r.value <= r.high);
    }
}

TEST_CASE("roots on the search endpoints are still found") {
    std::vector<double> p{1, -6, 11, -6};
    std::vector<RootBracket> roots = isolate_real_roots(p, 1.0, 3.0);
    REQUIRE(roots.size() == 3);
    CHECK(roots.front().value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(roots.back().value == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("multiple roots are reported once") {
    std::vector<double> p{1, -3, 0, 4}; // (x-2)^2 (x+1)
    std::vector<RootBracket> roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].value == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(roots[1].value == doctest::Approx(2.0).epsilon(1e-9));

    std::vector<double> triple{1, -3, 3, -1}; // (x-1)^3
    std::vector<RootBracket> one = isolate_real_roots(triple);
    REQUIRE(one.size() == 1);
    CHECK(one[0].value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("the cauchy-bound overload finds all real roots") {
    std::vector<double> p{1, 0, -2}; // x^2 - 2
    std::vector<RootBracket> roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].value == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-9));
    CHECK(roots[1].value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("unseparable root clusters raise instead of lying") {
    // Roots t +/- sqrt(3)*2^-46 around t = 2^-21 + 2^-45. Every coefficient
    // is an exact double, the gap (~4.9e-14) is below the isolation width,
    // the roots are irrational so no bisection point ever hits one, and t
    // sits a full 2^-45 away from every dyadic of level 44 or coarser, so no
    // bisection point can fall between the roots before the width floor.
    double t = std::ldexp(1.0, -21) + std::ldexp(1.0, -45);
    std::vector<double> p{1.0, -2.0 * t, t * t - 3.0 * std::ldexp(1.0, -92)};
    CHECK_THROWS_AS(isolate_real_roots(p, 0.0, 1.0), WidenInterval);
}

TEST_CASE("random integer-root products are recovered exactly enough") {
    std::uint64_t state = 0x12345678u;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + int(next() % 4);
        std::vector<long long> roots;
        while (int(roots.size()) < n) {
            long long candidate = static_cast<long long>(next() % 21) - 10;
            if (std::find(roots.begin(), roots.end(), candidate) == roots.end())
                roots.push_back(candidate);
        }
        std::sort(roots.begin(), roots.end());
        std::vector<double> coeffs{1.0};
        for (long long r : roots) {
            std::vector<double> nextc(coeffs.size() + 1, 0.0);
            for (size_t i = 0; i < coeffs.size(); ++i) {
                nextc[i] += coeffs[i];
                nextc[i + 1] -= coeffs[i] * double(r);
            }
            coeffs = nextc;
        }
        std::vector<RootBracket> found = isolate_real_roots(coeffs);
        REQUIRE(found.size() == roots.size());
        for (size_t i = 0; i < roots.size(); ++i)
            CHECK(found[i].value == doctest::Approx(double(roots[i])).epsilon(1e-8));
    }
}

TEST_CASE("characteristic polynomial through newton's identities") {
    std::vector<double> d{1, 2, 3};
    SquareMatrix a = SquareMatrix::diagonal(d);
    std::vector<double> c = characteristic_polynomial(a);
    REQUIRE(c.size() == 4);
    CHECK(c[0] == 1.0);
    CHECK(c[1] == doctest::Approx(-6.0).epsilon(1e-12));
    CHECK(c[2] == doctest::Approx(11.0).epsilon(1e-12));
    CHECK(c[3] == doctest::Approx(-6.0).epsilon(1e-12));
}

TEST_CASE("real eigenvalues of an integer-spectrum matrix") {
    SquareMatrix a{{2, -1, -2, 0, 1},
                   {2, 2, 1, 1, 2},
                   {-2, 1, 1, 1, 1},
                   {-1, 1, 2, 1, -1},
                   {2, 0, 2, 0, 2}};
    std::vector<double> eig = real_eigenvalues(a);
    REQUIRE(eig.size() == 5);
    const double expected[] = {4, 3, 2, 1, -2};
    for (int i = 0; i < 5; ++i)
        CHECK(eig[size_t(i)] == doctest::Approx(expected[i]).epsilon(1e-7));
}

TEST_CASE("repeated eigenvalues keep their multiplicity") {
    std::vector<double> eig = real_eigenvalues(SquareMatrix::identity(3));
    REQUIRE(eig.size() == 3);
    for (double v : eig) CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("a rotation has no real eigenvalues") {
    SquareMatrix rot{{0, -1}, {1, 0}};
    CHECK_THROWS_AS(real_eigenvalues(rot), NotAllRootsReal);
}

TEST_CASE("similarity fixtures hide a known spectrum") {
    std::vector<long long> spectrum{7, 3, -2, -5};
    for (std::uint64_t seed : {1ull, 99ull, 2026ull}) {
        SquareMatrix a = similarity_fixture(spectrum, seed);
        CHECK(a.order() == 4);
        CHECK(a.trace() == 3.0); // exact integer arithmetic
        std::vector<double> eig = real_eigenvalues(a);
        REQUIRE(eig.size() == 4);
        CHECK(eig[0] == doctest::Approx(7.0).epsilon(1e-7));
        CHECK(eig[1] == doctest::Approx(3.0).epsilon(1e-7));
        CHECK(eig[2] == doctest::Approx(-2.0).epsilon(1e-7));
        CHECK(eig[3] == doctest::Approx(-5.0).epsilon(1e-7));
    }
}

TEST_CASE("fixtures are deterministic in the seed and not diagonal") {
    std::vector<long long> spectrum{4, 1, -3};
    SquareMatrix a = similarity_fixture(spectrum, 5);
    SquareMatrix b = similarity_fixture(spectrum, 5);
    double off = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(a.at(i, j) == b.at(i, j));
            if (i != j) off += std::abs(a.at(i, j));
        }
    CHECK(off > 0.0);
}

TEST_CASE("exhaustive verification of a tiny family") {
    GeneratorSpec gen;
    gen.family = Family::distinct_integers;
    gen.n_min = 3;
    gen.n_max = 3;
    gen.lo = -2;
    gen.hi = 2;
    gen.exhaustive = true;
    VerificationRun run = verify(gen, {"all-integer"});
    CHECK(run.inputs == 10); // C(5,3)
    CHECK(run.checks > 0);
    CHECK(run.failures.empty());
}

TEST_CASE("two-block samples maximize the order-statistic inequalities") {
    GeneratorSpec gen;
    gen.family = Family::two_block;
    gen.n_min = 2;
    gen.n_max = 8;
    gen.lo = -6;
    gen.hi = 6;
    gen.count = 30;
    gen.seed = 5;
    VerificationRun run = verify(gen, {"thm1-upper"});
    CHECK(run.failures.empty());
    CHECK(run.equalities.count("gen-order-upper"));
    CHECK(run.equalities.at("gen-order-upper") > 0);
}

TEST_CASE("random real samples pass the full real suite") {
    GeneratorSpec gen;
    gen.family = Family::real_uniform;
    gen.n_min = 2;
    gen.n_max = 8;
    gen.lo = -10;
    gen.hi = 10;
    gen.count = 50;
    gen.seed = 9;
    VerificationRun run = verify(gen, {"all-real"});
    CHECK(run.inputs == 50);
    CHECK(run.failures.empty());
}

TEST_CASE("verification runs are deterministic") {
    GeneratorSpec gen;
    gen.family = Family::two_block;
    gen.n_min = 3;
    gen.n_max = 6;
    gen.lo = -5;
    gen.hi = 5;
    gen.count = 20;
    gen.seed = 7;
    VerificationRun a = verify(gen, {"thm1"});
    VerificationRun b = verify(gen, {"thm1"});
    CHECK(a.checks == b.checks);
    CHECK(a.equalities == b.equalities);
    CHECK(a.failures.empty());
    CHECK(b.failures.empty());
}

TEST_CASE("generator and selector validation") {
    GeneratorSpec gen;

    gen.family = Family::real_uniform;
    CHECK_THROWS_AS(verify(gen, {"all-integer"}), InvalidInput);

    gen.family = Family::distinct_integers;
    CHECK_THROWS_AS(verify(gen, {"no-such-suite"}), InvalidInput);

    GeneratorSpec reversed;
    reversed.n_min = 5;
    reversed.n_max = 3;
    CHECK_THROWS_AS(verify(reversed, {"classic"}), InvalidInput);

    GeneratorSpec flat;
    flat.lo = 2.0;
    flat.hi = 2.0;
    CHECK_THROWS_AS(verify(flat, {"classic"}), InvalidInput);

    GeneratorSpec narrow; // cannot place 4 distinct integers in [0, 2]
    narrow.family = Family::distinct_integers;
    narrow.n_min = 4;
    narrow.n_max = 4;
    narrow.lo = 0;
    narrow.hi = 2;
    narrow.exhaustive = true;
    CHECK_THROWS_AS(verify(narrow, {"classic"}), InvalidInput);

    GeneratorSpec wrong_exhaustive;
    wrong_exhaustive.family = Family::real_uniform;
    wrong_exhaustive.exhaustive = true;
    CHECK_THROWS_AS(verify(wrong_exhaustive, {"all-real"}), InvalidInput);
}
