// Acceptance gate. Runs the six release criteria end to end against the
// library and prints one line per criterion; exits nonzero if any fail.
// Criteria 1-4 pin worked-example digits, criterion 5 runs the property
// suites, criterion 6 self-tests the eigenvalue oracle.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "mbounds/classic_bounds.hpp"
#include "mbounds/errors.hpp"
#include "mbounds/exact.hpp"
#include "mbounds/integer_refinements.hpp"
#include "mbounds/matrix.hpp"
#include "mbounds/oracle.hpp"
#include "mbounds/polynomial.hpp"
#include "mbounds/refined_bounds.hpp"
#include "mbounds/report.hpp"
#include "mbounds/sample.hpp"

using namespace mbounds;

namespace {

constexpr double kDigitTol = 5e-4;

struct Gate {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
    void digits(double got, double want, const std::string& what, double tol = kDigitTol) {
        if (!(std::isfinite(got) && std::abs(got - want) <= tol)) {
            char buf[192];
            std::snprintf(buf, sizeof buf, "%s: got %.10g, want %.10g (tol %g)", what.c_str(),
                          got, want, tol);
            ok = false;
            notes.emplace_back(buf);
        }
    }
};

int finish(int index, Gate& g) {
    std::printf("criterion %d: %s\n", index, g.ok ? "PASS" : "FAIL");
    for (const auto& note : g.notes) std::printf("  - %s\n", note.c_str());
    std::fflush(stdout);
    return g.ok ? 0 : 1;
}

const BoundEntry* find_id(const std::vector<BoundEntry>& entries, const std::string& id) {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

bool ledger_has(const report::Json& doc, const std::string& key) {
    if (!doc.contains("ledger")) return false;
    for (const auto& note : doc["ledger"])
        if (note["key"] == key) return true;
    return false;
}

Sample se1() { return Sample({10, 9, 8, 6, 5, 4, 3, 2, 1}); }
Sample gap5() { return Sample({10, 9, 8, 2, 1}); }

SquareMatrix x4() {
    return SquareMatrix{{4, 0, 2, 3}, {0, 5, 0, 1}, {2, 0, 6, 3}, {3, 1, 0, 7}};
}

SquareMatrix x8() {
    return SquareMatrix{{2, -1, -2, 0, 1},
                        {2, 2, 1, 1, 2},
                        {-2, 1, 1, 1, 1},
                        {-1, 1, 2, 1, -1},
                        {2, 0, 2, 0, 2}};
}

DepressedPolynomial x3() {
    std::vector<double> trailing{-53, -24, 412, -336};
    return DepressedPolynomial(5, trailing);
}

// Criterion 1: classic baselines reproduce the published example digits.
int criterion1() {
    Gate g;
    try {
        auto start = std::chrono::steady_clock::now();

        Sample t = se1();
        const BoundEntry* box = find_id(sharma_m3_bounds(t), "sharma-m3-box");
        g.require(box != nullptr, "sharma-m3-box entry missing");
        if (box != nullptr) {
            g.digits(box->lower, -20.3425, "se1 m3 box lower");
            g.digits(box->upper, 25.4074, "se1 m3 box upper");
        }
        g.digits(sharma_m2r_lower(t, 2).lower, 91.1250, "se1 m4 lower (r=2)");
        const BoundEntry* it3 = find_id(sharma_m4_upper(t), "sharma-m4");
        g.require(it3 != nullptr, "sharma-m4 entry missing");
        if (it3 != nullptr) g.digits(it3->upper, 181.0022, "se1 m4 upper");

        g.digits(sharma_saini_m2r_lower(gap5(), 2, 5).lower, 126.9531,
                 "gap5 m4 lower (j=5)");

        SquareMatrix a = x4();
        BoundEntry l1 = eigen_interval(a, 1, 1);
        g.digits(l1.lower, 5.5000, "x4 lambda1 lower");
        g.digits(l1.upper, 10.4749, "x4 lambda1 upper");
        g.digits(eigen_interval(a, 3, 1).upper, 7.1583, "x4 lambda3 upper");
        g.digits(eigen_interval(a, 2, 1).lower, 3.8417, "x4 lambda2 lower");
        g.digits(eigen_interval(a, 4, 1).lower, 0.5250, "x4 lambda4 lower");

        std::vector<BoundEntry> spd = spread_baselines(x8());
        const BoundEntry* nagy = find_id(spd, "spread-nagy");
        const BoundEntry* sharma = find_id(spd, "spread-sharma-m4");
        const BoundEntry* combo = find_id(spd, "spread-combo-lower");
        g.require(nagy && sharma && combo, "x8 spread baselines missing");
        if (nagy) g.digits(nagy->upper, 6.5115, "x8 spread upper (m2)");
        if (sharma) g.digits(sharma->upper, 6.3648, "x8 spread upper (m4)");
        if (combo) g.digits(combo->lower, 5.5119, "x8 spread lower");

        DepressedPolynomial p = x3();
        g.digits(root_interval(p, 1, 1).upper, 9.2087, "x3 root1 upper");
        g.digits(root_interval(p, 2, 1).lower, -2.3022, "x3 root2 lower");
        std::vector<BoundEntry> spans = span_bounds(p);
        const BoundEntry* sn = find_id(spans, "span-nagy");
        const BoundEntry* ss = find_id(spans, "span-sharma-m4");
        const BoundEntry* sc = find_id(spans, "span-combo-lower");
        g.require(sn && ss && sc, "x3 span baselines missing");
        if (sn) g.digits(sn->upper, 14.5602, "x3 span upper (m2)");
        if (ss) g.digits(ss->upper, 13.3496, "x3 span upper (m4)");
        if (sc) g.digits(sc->lower, 12.0986, "x3 span lower");

        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        g.require(secs < 1.0, "baseline digit block took " + std::to_string(secs) + " s");
    } catch (const std::exception& e) {
        g.require(false, std::string("exception: ") + e.what());
    }
    return finish(1, g);
}

// Criterion 2: refined digits where the published material is consistent.
int criterion2() {
    Gate g;
    try {
        Sample t = se1();
        g.digits(m4_lower_with_range(t).lower, 103.9028, "se1 refined m4 lower");
        g.digits(m4_upper_refined(t).upper, 162.5578, "se1 refined m4 upper");

        g.digits(m2r_lower_piecewise(gap5(), 4, 2).lower, 132.7407,
                 "gap5 m4 lower (j=4)");

        DepressedPolynomial p = x3();
        g.digits(root_interval(p, 1, 2).upper, 7.9070, "x3 r=2 root1 upper");
        g.digits(root_interval(p, 5, 2).lower, -7.9070, "x3 r=2 root5 lower");
        g.digits(root_interval(p, 2, 2).lower, -1.9768, "x3 r=2 root2 lower");
        g.digits(root_interval(p, 4, 2).upper, 1.9768, "x3 r=2 root4 upper");
    } catch (const std::exception& e) {
        g.require(false, std::string("exception: ") + e.what());
    }
    return finish(2, g);
}

// Criterion 3: values recomputed where published example arithmetic conflicts
// with the stated inequalities, each carrying a ledger note in the reports.
int criterion3() {
    Gate g;
    try {
        SquareMatrix m = x8();
        g.digits(spread_upper(m).upper, 6.3571, "x8 refined spread upper");
        g.digits(spread_lower(m).lower, 5.5685, "x8 refined spread lower");

        IntegerRootsClaim claim;
        claim.distinct_integer_roots = true;
        std::vector<BoundEntry> spans = span_bounds(x3(), claim);
        const BoundEntry* up = find_id(spans, "span-upper-refined");
        const BoundEntry* low = find_id(spans, "span-lower-refined");
        g.require(up && low, "x3 refined span entries missing");
        if (up) g.digits(up->upper, 13.3479, "x3 refined span upper");
        if (low) g.digits(low->lower, 12.1040, "x3 refined span lower");

        const BoundEntry* c2 = find_id(m3_central_bounds_refined(se1()), "m3-box-refined");
        g.require(c2 != nullptr, "se1 refined m3 box entry missing");
        if (c2 != nullptr) {
            g.digits(c2->lower, -10.4536, "se1 refined m3 lower");
            g.digits(c2->upper, 15.5185, "se1 refined m3 upper");
        }

        // Every recomputation above must be announced in the report ledger.
        report::Json sdoc =
            report::sample_report({10, 9, 8, 6, 5, 4, 3, 2, 1}, report::SampleOptions{});
        g.require(ledger_has(sdoc, "beta-closed-forms"), "sample ledger lacks beta note");

        report::MatrixOptions mopt;
        mopt.integer_spectrum = true;
        report::Json mdoc = report::matrix_report(m, mopt);
        g.require(ledger_has(mdoc, "spread-upper-closed-form") &&
                      ledger_has(mdoc, "spread-lower-closed-form") &&
                      ledger_has(mdoc, "spread-refined-example-digits"),
                  "matrix ledger lacks spread notes");

        report::PolyOptions popt;
        popt.integer_roots = true;
        report::Json pdoc = report::poly_report({0, -53, -24, 412, -336}, popt);
        g.require(ledger_has(pdoc, "span-refined-example-digits") &&
                      ledger_has(pdoc, "span-lower-closed-form"),
                  "poly ledger lacks span notes");
    } catch (const std::exception& e) {
        g.require(false, std::string("exception: ") + e.what());
    }
    return finish(3, g);
}

// Criterion 4: re-centered eigenvalue intervals for the x4 example. The
// recomputed values must contain the true spectrum; where they disagree with
// the published digits beyond 1e-3 the ledger must say so.
int criterion4() {
    Gate g;
    try {
        SquareMatrix a = x4();
        std::vector<double> eig = oracle::real_eigenvalues(a);

        struct Case {
            BoundEntry entry;
            int j;
            double recomputed; // frozen from the exact recomputation
            double published;
            bool use_upper;
        };
        std::vector<Case> cases;
        cases.push_back({eigen_interval_functional(a, 1, 1, FunctionalSpec::diag_avg({1, 2}), 5),
                         1, 8.6138, 8.1261, false});
        cases.push_back({eigen_interval_functional(a, 1, 1, FunctionalSpec::diag_avg({1, 2}), 5),
                         1, 9.9490, 9.3775, true});
        cases.push_back({eigen_interval(a, 3, 3), 3, 7.0331, 6.9886, true});
        cases.push_back({eigen_interval_functional(a, 2, 1, FunctionalSpec::entry(4, 1), 3), 2,
                         4.8557, 5.3900, false});
        cases.push_back(
            {eigen_interval_functional(a, 4, 2, FunctionalSpec::trace_mean(), 3), 4, 1.4006,
             1.2534, false});

        bool needs_ledger = false;
        for (size_t i = 0; i < cases.size(); ++i) {
            const Case& c = cases[i];
            double got = c.use_upper ? c.entry.upper : c.entry.lower;
            std::string tag = "x4 case " + std::to_string(i + 1);
            g.digits(got, c.recomputed, tag + " recomputed value");
            double truth = eig[static_cast<size_t>(c.j - 1)];
            g.require(c.entry.lower <= truth + 1e-9 && truth <= c.entry.upper + 1e-9,
                      tag + " interval misses its eigenvalue");
            if (std::abs(got - c.published) > 1e-3) needs_ledger = true;
        }

        report::MatrixOptions opt;
        opt.r = 3;
        opt.phi = "diag-avg:1,2";
        opt.q = 5;
        opt.verify_spectrum = true;
        report::Json doc = report::matrix_report(a, opt);
        g.require(!needs_ledger || ledger_has(doc, "x4-functional-digits"),
                  "published-digit mismatch not recorded in the ledger");
    } catch (const std::exception& e) {
        g.require(false, std::string("exception: ") + e.what());
    }
    return finish(4, g);
}

std::uint64_t xorshift(std::uint64_t& state) {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
}

// Criterion 5: property suites.
int criterion5() {
    Gate g;
    try {
        // Exhaustive distinct-integer verification, refinements included.
        auto start = std::chrono::steady_clock::now();
        oracle::GeneratorSpec ex;
        ex.family = oracle::Family::distinct_integers;
        ex.n_min = 3;
        ex.n_max = 6;
        ex.lo = -8;
        ex.hi = 8;
        ex.exhaustive = true;
        oracle::VerificationRun run = oracle::verify(ex, {"all"});
        g.require(run.failures.empty(),
                  "exhaustive run: " + std::to_string(run.failures.size()) + " failures");
        g.require(run.inputs == 21624,
                  "exhaustive run covered " + std::to_string(run.inputs) + " inputs");
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        g.require(secs < 60.0, "exhaustive run took " + std::to_string(secs) + " s");

        // Random real samples; includes the r=1 reduction to the classic
        // interval at 1e-12 relative.
        oracle::GeneratorSpec re;
        re.family = oracle::Family::real_uniform;
        re.n_min = 3;
        re.n_max = 50;
        re.lo = -10;
        re.hi = 10;
        re.count = 10000;
        re.seed = 7;
        oracle::VerificationRun real_run = oracle::verify(re, {"all-real"});
        g.require(real_run.failures.empty(),
                  "real run: " + std::to_string(real_run.failures.size()) + " failures");
        g.require(real_run.inputs == 10000, "real run input count off");

        // Two-block equality configurations, both sides, r in {1,2,3}.
        oracle::GeneratorSpec tb;
        tb.family = oracle::Family::two_block;
        tb.n_min = 3;
        tb.n_max = 8;
        tb.lo = -9;
        tb.hi = 9;
        tb.count = 500;
        tb.seed = 11;
        oracle::VerificationRun tb_run = oracle::verify(tb, {"thm1"});
        g.require(tb_run.failures.empty(), "two-block run failed");
        g.require(tb_run.equalities.count("gen-order") != 0 &&
                      tb_run.equalities.at("gen-order") > 0,
                  "two-block run saw no order-statistic equalities");
        oracle::VerificationRun tb_up = oracle::verify(tb, {"thm1-upper"});
        g.require(tb_up.equalities.count("gen-order-upper") != 0 &&
                      tb_up.equalities.at("gen-order-upper") > 0,
                  "two-block upper-side equalities missing");
        Sample block({9, 1, 1, 1, 1});
        for (int r = 1; r <= 3; ++r) {
            g.digits(general_order_interval(block, 1, r).upper, 9.0,
                     "two-block upper equality r=" + std::to_string(r), 1e-9);
            g.digits(general_order_interval(block, 2, r).lower, 1.0,
                     "two-block lower equality r=" + std::to_string(r), 1e-9);
        }

        // Attainment fixtures for the fourth-moment floors, exact.
        std::vector<long long> nine{-4, -3, -2, -1, 0, 1, 2, 3, 4};
        g.require(oracle::exact_central_moment(nine, 4) == m4_count_floor(9, true),
                  "count-only m4 floor not attained on -4..4");
        Sample five({4, 1, 0, -1, -4});
        BoundEntry range_entry = m4_lower_with_range(five);
        g.require(range_entry.eq_tag == "5t2", "range-corrected m4 lower took wrong branch");
        g.digits(range_entry.lower, 102.8, "range-corrected m4 equality", 1e-9);
        std::vector<double> cubic{-1, 0};
        BoundEntry pt4 = integer_roots_necessary(DepressedPolynomial(3, cubic));
        g.require(pt4.check_lhs == 1.0 && pt4.check_rhs == 1.0 && pt4.holds == true,
                  "necessary integer-root check not tight on x^3 - x");

        // Correction constants: closed use of the minimization for every n,
        // and the index-reversal symmetry of the first two sums.
        for (int n = 3; n <= 500; ++n) {
            std::vector<BigInt> g1(static_cast<size_t>(n)), g2(static_cast<size_t>(n));
            BigInt min1, min3;
            for (int k = 1; k <= n - 1; ++k) {
                g1[static_cast<size_t>(k)] = gamma_sum(n, k, GammaKind::gamma1);
                g2[static_cast<size_t>(k)] = gamma_sum(n, k, GammaKind::gamma2);
                BigInt g3 = gamma_sum(n, k, GammaKind::gamma3);
                if (k == 1 || g1[static_cast<size_t>(k)] < min1) min1 = g1[static_cast<size_t>(k)];
                if (k == 1 || g3 < min3) min3 = g3;
            }
            BetaCorrection bc = beta_correction(n);
            if (!(bc.beta1 == BigRat(min1, n) && bc.beta2 == BigRat(min3, n))) {
                g.require(false, "beta mismatch at n=" + std::to_string(n));
                break;
            }
            bool symmetric = true;
            for (int k = 1; k <= n - 1; ++k)
                if (g2[static_cast<size_t>(k)] != g1[static_cast<size_t>(n - k)]) {
                    symmetric = false;
                    break;
                }
            if (!symmetric) {
                g.require(false, "gamma symmetry fails at n=" + std::to_string(n));
                break;
            }
        }

        // Floor-of-root guarantees on random coefficient pairs.
        std::uint64_t state = 0x9e3779b97f4a7c15ull;
        for (int i = 0; i < 5000; ++i) {
            long long b = static_cast<long long>(xorshift(state) % 60);
            long long c = static_cast<long long>(xorshift(state) % 3600);
            long long tt = floor_of_largest_root(static_cast<double>(b), static_cast<double>(c));
            if (!(c - tt * tt - tt * b >= 0 && (tt + 1) * (tt + 1) + tt * b + b - c >= 0)) {
                g.require(false, "largest-root floor fails at b=" + std::to_string(b) +
                                     " c=" + std::to_string(c));
                break;
            }
        }
        for (int i = 0; i < 5000; ++i) {
            long long b = 1 + static_cast<long long>(xorshift(state) % 120);
            long long cmax = (b * b - 1) / 4;
            long long c = cmax > 0 ? static_cast<long long>(xorshift(state) %
                                                            static_cast<std::uint64_t>(cmax + 1))
                                   : 0;
            long long tt = floor_of_smallest_root(static_cast<double>(b), static_cast<double>(c));
            if (!(c + tt * tt - tt * b >= 0 && tt * b - (tt + 1) * (tt + 1) + b - c >= 0)) {
                g.require(false, "smallest-root floor fails at b=" + std::to_string(b) +
                                     " c=" + std::to_string(c));
                break;
            }
        }
    } catch (const std::exception& e) {
        g.require(false, std::string("exception: ") + e.what());
    }
    return finish(5, g);
}

// Criterion 6: the eigenvalue oracle recovers known integer spectra.
int criterion6() {
    Gate g;
    try {
        std::uint64_t state = 0x2545f4914f6cdd1dull;
        for (int fixture = 1; fixture <= 100; ++fixture) {
            int n = 3 + static_cast<int>(xorshift(state) % 6);
            std::set<long long> chosen;
            while (static_cast<int>(chosen.size()) < n)
                chosen.insert(static_cast<long long>(xorshift(state) % 41) - 20);
            std::vector<long long> spectrum(chosen.rbegin(), chosen.rend());

            SquareMatrix a = oracle::similarity_fixture(spectrum, static_cast<std::uint64_t>(fixture));
            std::vector<double> eig = oracle::real_eigenvalues(a);
            bool good = eig.size() == spectrum.size();
            for (size_t i = 0; good && i < eig.size(); ++i)
                good = std::abs(eig[i] - static_cast<double>(spectrum[i])) <= 1e-6;
            if (!good) {
                g.require(false, "fixture " + std::to_string(fixture) + " spectrum not recovered");
                break;
            }
        }
    } catch (const std::exception& e) {
        g.require(false, std::string("exception: ") + e.what());
    }
    return finish(6, g);
}

} // namespace

int main() {
    int failed = 0;
    failed += criterion1();
    failed += criterion2();
    failed += criterion3();
    failed += criterion4();
    failed += criterion5();
    failed += criterion6();
    return failed == 0 ? 0 : 1;
}
