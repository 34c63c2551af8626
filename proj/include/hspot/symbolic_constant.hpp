#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include "hspot/errors.hpp"
#include "hspot/rational.hpp"

namespace hspot {

/// Exact scalar of the form q * pi^(p/2) with q rational and p an integer.
///
/// Every constant appearing in the kernel chain and in the T*/U* calculus is a
/// product of rationals, powers of pi and Gamma values at half-integers, so a
/// single term of this shape suffices.  Adding two values with different
/// pi-powers is rejected rather than widened to a sum: such a mismatch never
/// occurs in a correct derivation.
struct SymbolicConstant {
    Rational q{0};
    int p{0};  // value = q * pi^(p/2)

    SymbolicConstant() = default;
    SymbolicConstant(Rational q_, int p_) : q(std::move(q_)), p(p_) {
        if (q == 0) p = 0;
    }

    static SymbolicConstant rational(Rational r) { return {std::move(r), 0}; }
    static SymbolicConstant zero() { return {}; }
    static SymbolicConstant one() { return {Rational(1), 0}; }
    /// pi^(half_power/2)
    static SymbolicConstant pi_half_power(int half_power) { return {Rational(1), half_power}; }

    bool is_zero() const { return q == 0; }

    SymbolicConstant operator-() const { return {-q, p}; }

    SymbolicConstant operator*(const SymbolicConstant& o) const {
        return {q * o.q, p + o.p};
    }
    SymbolicConstant operator/(const SymbolicConstant& o) const {
        if (o.q == 0) throw std::domain_error("SymbolicConstant: division by zero");
        return {q / o.q, p - o.p};
    }
    SymbolicConstant operator+(const SymbolicConstant& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (p != o.p)
            throw PiPowerMismatch("SymbolicConstant: sum of distinct pi-powers " +
                                  std::to_string(p) + "/2 and " + std::to_string(o.p) + "/2");
        return {q + o.q, p};
    }
    SymbolicConstant operator-(const SymbolicConstant& o) const { return *this + (-o); }

    bool operator==(const SymbolicConstant& o) const {
        return (q == o.q) && (is_zero() || p == o.p);
    }
    bool operator!=(const SymbolicConstant& o) const { return !(*this == o); }

    double to_double() const {
        return hspot::to_double(q) * std::pow(M_PI, 0.5 * p);
    }

    /// Canonical exact rendering, e.g. "3/4*pi^(1/2)", "-2*pi^3", "5".
    std::string to_string() const {
        std::ostringstream os;
        os << q;
        if (!is_zero() && p != 0) {
            if (p % 2 == 0)
                os << "*pi^" << (p / 2);
            else
                os << "*pi^(" << p << "/2)";
        }
        return os.str();
    }

    std::string to_decimal_string(int significant_digits = 15) const {
        std::ostringstream os;
        os.precision(significant_digits);
        os << to_double();
        return os.str();
    }
};

inline SymbolicConstant pow_int(const SymbolicConstant& c, long e) {
    if (e < 0) return SymbolicConstant::one() / pow_int(c, -e);
    SymbolicConstant acc = SymbolicConstant::one();
    for (long i = 0; i < e; ++i) acc = acc * c;
    return acc;
}

/// Gamma(z) for z = two_z/2 > 0, exact.  p is 0 for integer z and 1 for
/// half-integer z (Gamma(1/2) = sqrt(pi)).
inline SymbolicConstant gamma_half(long two_z) {
    if (two_z <= 0)
        throw GammaPoleError("gamma_half: argument " + std::to_string(two_z) +
                             "/2 is not positive (use gamma_ratio_limit at poles)");
    if (two_z % 2 == 0) {
        return SymbolicConstant::rational(Rational(factorial(two_z / 2 - 1)));
    }
    // Gamma(n + 1/2) = (2n-1)!! / 2^n * sqrt(pi), n = (two_z-1)/2
    long n = (two_z - 1) / 2;
    Rational q(double_factorial(2 * n - 1), BigInt(1) << n);
    return {q, 1};
}

/// Gamma(z) for any non-pole half-integer z = two_z/2 (two_z odd may be
/// negative; Gamma(-1/2) = -2 sqrt(pi) and so on).
inline SymbolicConstant gamma_half_any(long two_z) {
    if (two_z > 0) return gamma_half(two_z);
    if (two_z % 2 == 0)
        throw GammaPoleError("gamma_half_any: pole at nonpositive integer " +
                             std::to_string(two_z / 2));
    // Gamma(z) = Gamma(z + n) / (z (z+1) ... (z+n-1)), lift into the positive range.
    long n = (1 - two_z) / 2 + 1;  // two_z + 2n >= 1
    SymbolicConstant num = gamma_half(two_z + 2 * n);
    Rational den(1);
    for (long i = 0; i < n; ++i) den *= Rational(two_z + 2 * i, 2);
    return {num.q / den, num.p};
}

/// lim_{eps->0} Gamma(-neg_a + eps) / Gamma(-neg_b + eps)
///             = (-1)^(neg_a - neg_b) * neg_b! / neg_a!
inline Rational gamma_ratio_limit(long neg_a, long neg_b) {
    if (neg_a < 0 || neg_b < 0)
        throw std::domain_error("gamma_ratio_limit: arguments must be nonnegative");
    Rational r(factorial(neg_b), factorial(neg_a));
    if ((neg_a - neg_b) % 2 != 0) r = -r;
    return r;
}

/// Gamma(z) / Gamma(z - k) = (z-1)(z-2)...(z-k) for z = two_z/2, k >= 0.
/// The falling product equals the eps->0 limit of the quotient, so it is
/// valid also when both arguments sit at poles (the case m odd in the
/// closed-form kernel coefficients).
inline Rational gamma_falling_ratio(long two_z, long k) {
    if (k < 0) throw std::domain_error("gamma_falling_ratio: k must be >= 0");
    Rational acc(1);
    for (long i = 1; i <= k; ++i) acc *= Rational(two_z - 2 * i, 2);
    return acc;
}

/// sigma_n = 2 pi^(n/2) / Gamma(n/2), the area of the unit sphere S^{n-1}.
inline SymbolicConstant sphere_area(long n) {
    if (n < 1) throw std::domain_error("sphere_area: n must be >= 1");
    SymbolicConstant num(Rational(2), n);
    return num / gamma_half(n);
}

}  // namespace hspot
