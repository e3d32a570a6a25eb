#ifndef MBOUNDS_REPORT_HPP
#define MBOUNDS_REPORT_HPP

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "mbounds/matrix.hpp"
#include "mbounds/oracle.hpp"
#include "mbounds/polynomial.hpp"
#include "mbounds/sample.hpp"

namespace mbounds::report {

using Json = nlohmann::ordered_json;

/// Significant digits used for printing, 10 unless the MBOUNDS_PRECISION
/// environment variable overrides it (clamped to 3..17).
int print_precision();

/// v rendered with print_precision() significant digits.
std::string format_number(double v);

/// The double obtained by reparsing format_number(v), so that numbers placed
/// in a report serialize to exactly the printed digits.
double canonical(double v);

/// "fnv1a:" + 64-bit FNV-1a hash of the canonical rendering of the values.
std::string data_digest(std::span<const double> values);

/// One bound entry rendered to JSON (endpoints canonicalized, parameters
/// flattened, assumptions spelled out).
Json entry_to_json(const BoundEntry& e);

struct SampleOptions {
    int r = 2;               ///< order parameter for the 2r-th moment families
    std::vector<int> j_list; ///< empty means every j
    bool integer_claims = false;
};
Json sample_report(const std::vector<double>& values, const SampleOptions& opt);

struct MatrixOptions {
    std::vector<int> j_list; ///< empty means every j
    int r = 1;
    std::string phi;  ///< "trace-mean" | "entry:R,C" | "diag-avg:I,J,..." | "const:V"
    int q = 0;        ///< odd; 0 disables the re-centered interval
    bool integer_spectrum = false;
    bool verify_spectrum = false;
};
Json matrix_report(const SquareMatrix& a, const MatrixOptions& opt);

struct PolyOptions {
    std::vector<int> j_list; ///< empty means every j
    int max_r = 2;           ///< emit r = 1..max_r (r = 2 needs degree >= 5)
    bool integer_roots = false;
    bool verify_roots = false;
};
/// trailing = {a1, ..., an} of the monic input polynomial; depressed
/// automatically (the report records the shift).
Json poly_report(const std::vector<double>& trailing, const PolyOptions& opt);

/// Runs the verification harness and renders the run; *failures receives the
/// failure count for exit-code mapping.
Json verify_report(const oracle::GeneratorSpec& gen, const std::vector<std::string>& selectors,
                   long long* failures);

/// Aligned plain-text rendering of any report produced above.
std::string render_table(const Json& report);

} // namespace mbounds::report

#endif
