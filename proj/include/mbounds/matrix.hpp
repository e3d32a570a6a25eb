#ifndef MBOUNDS_MATRIX_HPP
#define MBOUNDS_MATRIX_HPP

#include <initializer_list>
#include <span>
#include <vector>

#include "mbounds/bounds.hpp"

namespace mbounds {

/// Dense real square matrix, row-major. Bound operations in this header
/// additionally assume all eigenvalues are real (caller-asserted; test
/// fixtures can be checked through the oracle).
class SquareMatrix {
public:
    explicit SquareMatrix(int n);
    SquareMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static SquareMatrix identity(int n);
    static SquareMatrix diagonal(std::span<const double> d);
    static SquareMatrix from_rows(const std::vector<std::vector<double>>& rows);

    int order() const noexcept { return n_; }

    double& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; } ///< 0-based
    double at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    SquareMatrix operator*(const SquareMatrix& rhs) const;
    SquareMatrix operator-(const SquareMatrix& rhs) const;

    double trace() const noexcept;

private:
    int n_;
    std::vector<double> a_;
};

/// tr(A^p) by repeated multiplication, p >= 1.
double trace_power(const SquareMatrix& a, int p);

/// B = A - (trA/n) I; tr B = 0 up to rounding.
SquareMatrix deviation_matrix(const SquareMatrix& a);

/// Scalar functional phi(A) used to re-center the matrix before bounding.
/// Indices are 1-based as in the report output.
struct FunctionalSpec {
    enum class Kind { trace_mean, entry, diag_avg, constant };
    Kind kind = Kind::trace_mean;
    int row = 0, col = 0;          ///< for entry
    std::vector<int> diag_indices; ///< for diag_avg
    double value = 0.0;            ///< for constant

    static FunctionalSpec trace_mean();
    static FunctionalSpec entry(int row, int col);
    static FunctionalSpec diag_avg(std::vector<int> indices);
    static FunctionalSpec constant(double v);
};

double evaluate(const FunctionalSpec& phi, const SquareMatrix& a);

/// Two-sided bound on the j-th largest eigenvalue from tr B^{2r}:
/// the order-statistic interval with mean trA/n and m_{2r} = tr B^{2r} / n.
/// r = 1 reproduces the Wolkowicz-Styan eigenvalue interval.
BoundEntry eigen_interval(const SquareMatrix& a, int j, int r);

/// Same interval built from C = (A - phi(A) I)^q with odd q: the j-th largest
/// eigenvalue lies in [phi + (cbar - alpha)^{1/q}, phi + (cbar + beta)^{1/q}]
/// where cbar = trC/n and alpha, beta are the order-statistic radii of C's
/// spectrum. q-th roots are real (sign-preserving).
BoundEntry eigen_interval_functional(const SquareMatrix& a, int j, int r,
                                     const FunctionalSpec& phi, int q);

/// Spread baselines from trace powers: spd <= sqrt(2 n m2),
/// spd <= (8 n m4)^{1/4}, and spd >= (64 (m4 - m2^2 - m3^2/m2))^{1/4}.
std::vector<BoundEntry> spread_baselines(const SquareMatrix& a);

/// spd <= (8n (m4 - c(n)))^{1/4} for n distinct integer eigenvalues
/// (caller-asserted); the integer-mean branch of c(n) is used when n
/// divides trA.
BoundEntry spread_upper(const SquareMatrix& a);

/// spd >= (64 (m4 - m2^2 - m3^2/m2 + beta2(n)))^{1/4} for n distinct integer
/// eigenvalues (caller-asserted).
BoundEntry spread_lower(const SquareMatrix& a);

} // namespace mbounds

#endif
