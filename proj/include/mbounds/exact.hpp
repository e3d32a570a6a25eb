#ifndef MBOUNDS_EXACT_HPP
#define MBOUNDS_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace mbounds {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline double to_double(const BigRat& q) { return q.convert_to<double>(); }
inline double to_double(const BigInt& i) { return i.convert_to<double>(); }

/// Sum of fourth powers 1^4 + 2^4 + ... + m^4; zero for m <= 0.
inline BigInt fourth_power_sum(long long m) {
    if (m <= 0) return 0;
    BigInt n = m;
    // m(m+1)(2m+1)(3m^2+3m-1)/30
    return n * (n + 1) * (2 * n + 1) * (3 * n * n + 3 * n - 1) / 30;
}

} // namespace mbounds

#endif
