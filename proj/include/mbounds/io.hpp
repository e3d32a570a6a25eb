#ifndef MBOUNDS_IO_HPP
#define MBOUNDS_IO_HPP

#include <string>
#include <vector>

#include "mbounds/matrix.hpp"
#include "mbounds/polynomial.hpp"

namespace mbounds::io {

/// Sample file: UTF-8 text, numbers separated by newlines, commas, or spaces;
/// '#' starts a comment that runs to end of line.
std::vector<double> parse_sample_text(const std::string& text);
std::vector<double> read_sample_file(const std::string& path);

/// Matrix file: CSV, n rows of n comma-separated reals.
SquareMatrix parse_matrix_csv(const std::string& text);
SquareMatrix read_matrix_file(const std::string& path);

/// Polynomial from a CLI coefficient list, highest-degree-first. A list whose
/// first token is exactly 1 is read as the full monic coefficient list
/// {1, a1, ..., an}; otherwise the tokens are {a1, ..., an} with the leading
/// 1 implied. Returns the trailing coefficients {a1..an}.
std::vector<double> parse_poly_coefficients(const std::vector<double>& tokens);

/// Polynomial from JSON {"degree": n, "coeffs": {"b2": ..., "b5": ...}};
/// missing b_i are zero. The result is already depressed.
DepressedPolynomial parse_poly_json(const std::string& text);

} // namespace mbounds::io

#endif
