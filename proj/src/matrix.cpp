#include "mbounds/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

#include "mbounds/errors.hpp"
#include "mbounds/integer_refinements.hpp"
#include "mbounds/refined_bounds.hpp"
#include "mbounds/summation.hpp"

namespace mbounds {
namespace {

constexpr const char* kRealSpectrumNote = "valid when all eigenvalues are real";
constexpr const char* kIntegerSpectrumNote =
    "assumes n distinct integer eigenvalues";

double signed_root(double x, int q) {
    if (q == 1) return x;
    return x >= 0.0 ? std::pow(x, 1.0 / q) : -std::pow(-x, 1.0 / q);
}

/// tr(B^order)/n for an already centered B. Even-order values are sums of
/// even powers of real eigenvalues, so a materially negative result means
/// the real-spectrum assumption is broken; tiny negatives are rounding.
double trace_moment(const SquareMatrix& b, int order) {
    int n = b.order();
    double v = trace_power(b, order) / n;
    if (order % 2 == 0 && v < 0.0) {
        CompensatedSum sq;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) sq.add(b.at(i, j) * b.at(i, j));
        double scale = 1.0 + n * std::pow(std::sqrt(sq.value()), order);
        if (v < -1e-9 * scale)
            throw InvalidInput("negative even-order trace moment: the spectrum is not real");
        v = 0.0;
    }
    return v;
}

struct SpectralMoments {
    double mean = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0;
};

SpectralMoments spectral_moments(const SquareMatrix& a) {
    SquareMatrix b = deviation_matrix(a);
    SpectralMoments m;
    m.mean = a.trace() / a.order();
    m.m2 = trace_moment(b, 2);
    m.m3 = trace_power(b, 3) / a.order();
    m.m4 = trace_moment(b, 4);
    return m;
}

bool divides_trace(const SquareMatrix& a) {
    double tr = a.trace();
    long long rounded = std::llround(tr);
    if (std::abs(tr - rounded) > 1e-9 * (1.0 + std::abs(tr))) return false;
    return rounded % a.order() == 0;
}

} // namespace

SquareMatrix::SquareMatrix(int n) : n_(n) {
    if (n < 1) throw InvalidInput("matrix order must be positive");
    a_.assign(static_cast<size_t>(n) * n, 0.0);
}

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : SquareMatrix(static_cast<int>(rows.size())) {
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n_)
            throw InvalidInput("matrix rows must all have length n");
        int j = 0;
        for (double v : row) at(i, j++) = v;
        ++i;
    }
}

SquareMatrix SquareMatrix::identity(int n) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

SquareMatrix SquareMatrix::diagonal(std::span<const double> d) {
    SquareMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.order(); ++i) m.at(i, i) = d[static_cast<size_t>(i)];
    return m;
}

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    SquareMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.order(); ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != m.order())
            throw InvalidInput("matrix rows must all have length n");
        for (int j = 0; j < m.order(); ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& rhs) const {
    if (n_ != rhs.n_) throw InvalidInput("matrix orders differ");
    SquareMatrix out(n_);
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < n_; ++k) {
            double aik = at(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < n_; ++j) out.at(i, j) += aik * rhs.at(k, j);
        }
    }
    return out;
}

SquareMatrix SquareMatrix::operator-(const SquareMatrix& rhs) const {
    if (n_ != rhs.n_) throw InvalidInput("matrix orders differ");
    SquareMatrix out(n_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
    return out;
}

double SquareMatrix::trace() const noexcept {
    CompensatedSum acc;
    for (int i = 0; i < n_; ++i) acc.add(at(i, i));
    return acc.value();
}

double trace_power(const SquareMatrix& a, int p) {
    if (p < 1) throw InvalidInput("trace power requires p >= 1");
    if (p == 1) return a.trace();
    SquareMatrix pw = a;
    for (int i = 1; i < p; ++i) pw = pw * a;
    return pw.trace();
}

SquareMatrix deviation_matrix(const SquareMatrix& a) {
    double mean = a.trace() / a.order();
    SquareMatrix b = a;
    for (int i = 0; i < b.order(); ++i) b.at(i, i) -= mean;
    return b;
}

FunctionalSpec FunctionalSpec::trace_mean() { return {}; }

FunctionalSpec FunctionalSpec::entry(int row, int col) {
    FunctionalSpec f;
    f.kind = Kind::entry;
    f.row = row;
    f.col = col;
    return f;
}

FunctionalSpec FunctionalSpec::diag_avg(std::vector<int> indices) {
    FunctionalSpec f;
    f.kind = Kind::diag_avg;
    f.diag_indices = std::move(indices);
    return f;
}

FunctionalSpec FunctionalSpec::constant(double v) {
    FunctionalSpec f;
    f.kind = Kind::constant;
    f.value = v;
    return f;
}

double evaluate(const FunctionalSpec& phi, const SquareMatrix& a) {
    int n = a.order();
    switch (phi.kind) {
    case FunctionalSpec::Kind::trace_mean:
        return a.trace() / n;
    case FunctionalSpec::Kind::entry:
        if (phi.row < 1 || phi.row > n || phi.col < 1 || phi.col > n)
            throw IndexError("functional entry index out of range");
        return a.at(phi.row - 1, phi.col - 1);
    case FunctionalSpec::Kind::diag_avg: {
        if (phi.diag_indices.empty())
            throw InvalidInput("diagonal average needs at least one index");
        CompensatedSum acc;
        for (int i : phi.diag_indices) {
            if (i < 1 || i > n) throw IndexError("diagonal index out of range");
            acc.add(a.at(i - 1, i - 1));
        }
        return acc.value() / static_cast<double>(phi.diag_indices.size());
    }
    case FunctionalSpec::Kind::constant:
        return phi.value;
    }
    throw InvalidInput("unknown functional selector");
}

BoundEntry eigen_interval(const SquareMatrix& a, int j, int r) {
    int n = a.order();
    if (j < 1 || j > n) throw IndexError("eigenvalue index out of range");
    double mean = a.trace() / n;
    double m2r = trace_moment(deviation_matrix(a), 2 * r);
    OrderStatRadii rad = order_stat_radii(n, j, r, m2r);

    BoundEntry e;
    e.id = "eigen-interval";
    e.eq_tag = "mcc1";
    e.kind = BoundKind::two_sided;
    e.target = BoundTarget::x_j;
    e.lower = mean - rad.lower;
    e.upper = mean + rad.upper;
    e.note = kRealSpectrumNote;
    e.with_param("j", j).with_param("r", r);
    return e;
}

BoundEntry eigen_interval_functional(const SquareMatrix& a, int j, int r,
                                     const FunctionalSpec& phi, int q) {
    if (q < 1 || q % 2 == 0) throw InvalidInput("q must be a positive odd integer");
    int n = a.order();
    if (j < 1 || j > n) throw IndexError("eigenvalue index out of range");

    BoundEntry e;
    e.id = "eigen-interval-functional";
    e.eq_tag = "mf1";
    e.kind = BoundKind::two_sided;
    e.target = BoundTarget::x_j;
    e.note = kRealSpectrumNote;
    e.with_param("j", j).with_param("r", r).with_param("q", q);

    if (phi.kind == FunctionalSpec::Kind::trace_mean && q == 1) {
        // phi(A) + (cbar +- radius) collapses to the plain interval; reuse it
        // so the reduction is exact rather than merely close.
        BoundEntry base = eigen_interval(a, j, r);
        e.lower = base.lower;
        e.upper = base.upper;
        return e;
    }

    double phiv = evaluate(phi, a);
    SquareMatrix shifted = a;
    for (int i = 0; i < n; ++i) shifted.at(i, i) -= phiv;
    SquareMatrix c = shifted;
    for (int i = 1; i < q; ++i) c = c * shifted;
    double cbar = c.trace() / n;
    double m2r = trace_moment(deviation_matrix(c), 2 * r);
    OrderStatRadii rad = order_stat_radii(n, j, r, m2r);

    e.lower = phiv + signed_root(cbar - rad.lower, q);
    e.upper = phiv + signed_root(cbar + rad.upper, q);
    return e;
}

std::vector<BoundEntry> spread_baselines(const SquareMatrix& a) {
    int n = a.order();
    SpectralMoments m = spectral_moments(a);
    if (m.m2 <= 0.0) throw DegenerateSample("matrix has a constant spectrum");

    BoundEntry nagy;
    nagy.id = "spread-nagy";
    nagy.eq_tag = "i2";
    nagy.kind = BoundKind::upper;
    nagy.target = BoundTarget::spread;
    nagy.upper = std::sqrt(2.0 * n * m.m2);
    nagy.note = kRealSpectrumNote;

    BoundEntry sharma;
    sharma.id = "spread-sharma-m4";
    sharma.eq_tag = "i3";
    sharma.kind = BoundKind::upper;
    sharma.target = BoundTarget::spread;
    sharma.upper = std::pow(8.0 * n * m.m4, 0.25);
    sharma.note = kRealSpectrumNote;
    sharma.with_param("r", 2);

    BoundEntry combo;
    combo.id = "spread-combo-lower";
    combo.eq_tag = "it4";
    combo.kind = BoundKind::lower;
    combo.target = BoundTarget::spread;
    double lhs = m.m4 - m.m2 * m.m2 - m.m3 * m.m3 / m.m2;
    if (lhs < 0.0) lhs = 0.0; // nonnegative in exact arithmetic
    combo.lower = std::pow(64.0 * lhs, 0.25);
    combo.note = kRealSpectrumNote;

    return {nagy, sharma, combo};
}

BoundEntry spread_upper(const SquareMatrix& a) {
    int n = a.order();
    if (n < 3) throw InvalidInput("spread refinement requires n >= 3");
    bool im = divides_trace(a);
    SpectralMoments m = spectral_moments(a);
    double c = to_double(m4_range_correction(n, im));

    BoundEntry e;
    e.id = "spread-upper-refined";
    e.eq_tag = im ? "m4t2" : "m4t3";
    e.kind = BoundKind::upper;
    e.target = BoundTarget::spread;
    e.assumptions.distinct_integers = true;
    e.assumptions.integer_mean = im;
    e.assumptions.n_min = 3;
    e.refines = "spread-sharma-m4";
    e.note = kIntegerSpectrumNote;
    double radicand = 8.0 * n * (m.m4 - c);
    if (radicand < 0.0) {
        e.applicable = false;
        e.note = "fourth trace moment is below the distinct-integer floor, "
                 "so the spectrum cannot be n distinct integers";
        return e;
    }
    e.upper = std::pow(radicand, 0.25);
    return e;
}

BoundEntry spread_lower(const SquareMatrix& a) {
    int n = a.order();
    if (n < 3) throw InvalidInput("spread refinement requires n >= 3");
    SpectralMoments m = spectral_moments(a);
    if (m.m2 <= 0.0) throw DegenerateSample("matrix has a constant spectrum");
    double lhs = m.m4 - m.m2 * m.m2 - m.m3 * m.m3 / m.m2;
    if (lhs < 0.0) lhs = 0.0;

    BoundEntry e;
    e.id = "spread-lower-refined";
    e.eq_tag = "m4t4";
    e.kind = BoundKind::lower;
    e.target = BoundTarget::spread;
    e.lower = std::pow(64.0 * (lhs + to_double(beta2(n))), 0.25);
    e.assumptions.distinct_integers = true;
    e.assumptions.n_min = 3;
    e.refines = "spread-combo-lower";
    e.note = kIntegerSpectrumNote;
    return e;
}

} // namespace mbounds
