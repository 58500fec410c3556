#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace treetau {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Falling factorial (a)_k = a(a-1)...(a-k+1) over the integers, (a)_0 = 1.
/// For a >= 0 the result is 0 whenever k > a.
inline BigInt falling_factorial(const BigInt& a, long k) {
    BigInt result = 1;
    for (long i = 0; i < k; ++i) result *= a - i;
    return result;
}

inline BigInt factorial(long n) { return falling_factorial(n, n); }

inline BigInt binomial(const BigInt& n, long k) {
    if (k < 0) return 0;
    return falling_factorial(n, k) / factorial(k);
}

/// ln (a)_k for real a > k-1, via lgamma differences.
inline double log_falling_factorial(double a, long k) {
    if (k == 0) return 0.0;
    return std::lgamma(a + 1.0) - std::lgamma(a - static_cast<double>(k) + 1.0);
}

inline double log_binomial(double n, long k) {
    return log_falling_factorial(n, k) - std::lgamma(static_cast<double>(k) + 1.0);
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r);
}

/// ln of a positive big integer without overflowing double conversion.
inline double log_bigint(const BigInt& v) {
    if (v <= 0) throw std::domain_error("log_bigint needs a positive argument");
    const unsigned bits = boost::multiprecision::msb(v);
    if (bits <= 900) return std::log(static_cast<double>(v));
    const BigInt shifted = v >> (bits - 64);
    return std::log(static_cast<double>(shifted)) +
           static_cast<double>(bits - 64) * std::log(2.0);
}

/// ln(sum exp(v_j)) with the usual max shift.
inline double log_sum_exp(std::span<const double> values) {
    if (values.empty()) return -std::numeric_limits<double>::infinity();
    double m = -std::numeric_limits<double>::infinity();
    for (double v : values) m = std::max(m, v);
    if (!std::isfinite(m)) return m;
    double s = 0.0;
    for (double v : values) s += std::exp(v - m);
    return m + std::log(s);
}

}  // namespace treetau
