#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace hspot {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base == 0) throw std::domain_error("rational_pow: 0^negative");
        return Rational(1) / rational_pow(base, -e);
    }
    Rational acc(1), b = base;
    long n = e;
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline BigInt factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    BigInt acc(1);
    for (long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

// (2n-1)!! with the empty-product conventions (-1)!! = 1!! = 1.
inline BigInt double_factorial(long n) {
    if (n < -1) throw std::domain_error("double_factorial below -1");
    BigInt acc(1);
    for (long i = n; i >= 2; i -= 2) acc *= i;
    return acc;
}

}  // namespace hspot
