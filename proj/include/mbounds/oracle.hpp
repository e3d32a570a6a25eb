#ifndef MBOUNDS_ORACLE_HPP
#define MBOUNDS_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mbounds/exact.hpp"
#include "mbounds/matrix.hpp"

namespace mbounds::oracle {

/// Calls fn once for every size-n subset of {lo..hi}, descending-sorted.
void enumerate_distinct_integer_samples(
    int n, long long lo, long long hi,
    const std::function<void(std::span<const long long>)>& fn);

/// Exact rational moments of an integer sample.
BigRat exact_mean(std::span<const long long> values);
BigRat exact_central_moment(std::span<const long long> values, int r);

/// An isolated real root: midpoint value plus the bracketing interval that
/// was bisected down to the requested width.
struct RootBracket {
    double value = 0.0;
    double low = 0.0;
    double high = 0.0;
};

/// All real roots of the monic polynomial with the given coefficients
/// (highest-degree-first, leading 1 included) inside [lo, hi], found by a
/// Sturm-sequence count in exact rational arithmetic and bisection to 1e-10.
/// Multiple roots are reported once; roots landing exactly on an endpoint are
/// divided out first and included in the result. Throws WidenInterval when
/// distinct roots sit closer together than the isolation width can separate.
std::vector<RootBracket> isolate_real_roots(std::span<const double> monic, double lo,
                                            double hi);

/// Same, over a Cauchy bound interval covering every real root.
std::vector<RootBracket> isolate_real_roots(std::span<const double> monic);

/// Coefficients of det(xI - A), highest-degree-first with leading 1, computed
/// from the power sums tr(A^k) via Newton's identities. n <= 16.
std::vector<double> characteristic_polynomial(const SquareMatrix& a);

/// Real eigenvalues of A (assumed all real), descending, through the
/// characteristic polynomial and the root isolator.
std::vector<double> real_eigenvalues(const SquareMatrix& a);

/// Test fixture A = P D P^{-1} with D = diag(spectrum) and P a product of a
/// few integer shear matrices, so all arithmetic is exact in doubles.
SquareMatrix similarity_fixture(std::span<const long long> spectrum, std::uint64_t seed);

/// Input families for the verification harness.
enum class Family { distinct_integers, two_block, real_uniform };

struct GeneratorSpec {
    Family family = Family::distinct_integers;
    int n_min = 3;
    int n_max = 5;
    double lo = -6.0;
    double hi = 6.0;
    bool exhaustive = false; ///< distinct_integers only
    long long count = 1000;  ///< ignored when exhaustive
    std::uint64_t seed = 1;
};

struct Failure {
    std::vector<double> input;
    std::string bound_id;
    double claimed = 0.0;
    double actual = 0.0;
};

/// Outcome of checking a set of bounds against ground truth on a generated
/// family. Integer samples are checked in exact rational arithmetic (zero
/// slack); real samples allow 1e-9 relative slack. Refined integer bounds are
/// additionally checked to be no looser than their baselines. Deterministic
/// for a fixed spec.
struct VerificationRun {
    GeneratorSpec gen;
    std::vector<std::string> bounds;
    long long inputs = 0;
    long long checks = 0;
    std::map<std::string, long long> equalities; ///< bound id -> tight hits
    std::vector<Failure> failures;
};

/// Known selectors: all, classic, thm1, thm1-upper, all-real, all-integer.
VerificationRun verify(const GeneratorSpec& gen, const std::vector<std::string>& selectors);

} // namespace mbounds::oracle

#endif
