#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hspot/errors.hpp"
#include "hspot/rational.hpp"
#include "hspot/symbolic_constant.hpp"

namespace hspot {

/// Sentinel for evaluation at +infinity (the boundary-value formulas need the
/// exact endpoint value, not a large float).
inline double plus_infinity() { return std::numeric_limits<double>::infinity(); }

/// Exact value of F_m(+inf) = (sqrt(pi)/2) Gamma(m/2) / Gamma((m+1)/2).
inline SymbolicConstant f_m_infinity(int m) {
    if (m < 1) throw std::domain_error("f_m_infinity: m must be >= 1");
    SymbolicConstant half_sqrt_pi(Rational(1, 2), 1);
    return half_sqrt_pi * gamma_half(m) / gamma_half(m + 1);
}

/// F_m(v) = int_0^v eta^{m-1} / (1+eta^2)^{(m+1)/2} d eta, evaluated through
/// the closed-form recurrence
///   F_m(v) = (m-2)/(m-1) F_{m-2}(v) - (1/(m-1)) v^{m-2} / (1+v^2)^{(m-1)/2}
/// with F_1(v) = arctan v and F_2(v) = 1 - (1+v^2)^{-1/2}.
inline double f_m(int m, double v) {
    if (m < 1) throw std::domain_error("f_m: m must be >= 1");
    if (std::isnan(v) || v < 0) throw std::domain_error("f_m: v must be >= 0");
    if (std::isinf(v)) return f_m_infinity(m).to_double();
    double f = (m % 2 == 1) ? std::atan(v) : 1.0 - 1.0 / std::sqrt(1.0 + v * v);
    const double v2 = 1.0 + v * v;
    for (int mm = (m % 2 == 1) ? 3 : 4; mm <= m; mm += 2) {
        f = ((mm - 2) * f - std::pow(v, mm - 2) / std::pow(v2, 0.5 * (mm - 1))) / (mm - 1);
    }
    return f;
}

/// Ftilde_{m-2}(u) = int_0^u (1+zeta^2)^{-(m-1)/2} d zeta for m > 2, computed
/// through Ftilde_{m-2}(u) = F_{m-2}(+inf) - F_{m-2}(1/u), with value 0 at u=0.
inline double f_tilde(int m, double u) {
    if (m <= 2) throw std::domain_error("f_tilde: m must be > 2");
    if (std::isnan(u) || u < 0) throw std::domain_error("f_tilde: u must be >= 0");
    if (u == 0.0) return 0.0;
    if (std::isinf(u)) return f_m_infinity(m - 2).to_double();
    return f_m_infinity(m - 2).to_double() - f_m(m - 2, 1.0 / u);
}

/// Terminating Gauss hypergeometric series: a or b must be a nonpositive
/// integer.  All arithmetic exact.
struct TerminatingHypergeometric {
    Rational a, b, c;

    TerminatingHypergeometric(Rational a_, Rational b_, Rational c_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
        if (c <= 0 && denominator(c) == 1)
            throw UnsupportedError("2F1: lower parameter is a nonpositive integer");
        if (!terminates())
            throw UnsupportedError("2F1: series does not terminate (neither a nor b is a nonpositive integer)");
    }

    bool terminates() const {
        return is_nonpositive_integer(a) || is_nonpositive_integer(b);
    }

    long term_count() const {
        long best = -1;
        if (is_nonpositive_integer(a)) best = -a.convert_to<long>();
        if (is_nonpositive_integer(b)) {
            long nb = -b.convert_to<long>();
            if (best < 0 || nb < best) best = nb;
        }
        return best + 1;
    }

    static bool is_nonpositive_integer(const Rational& r) {
        return denominator(r) == 1 && r <= 0;
    }

    Rational eval(const Rational& z) const {
        Rational sum(0), term(1);
        const long n = term_count();
        for (long i = 0; i < n; ++i) {
            sum += term;
            term *= (a + i) * (b + i) * z / ((c + i) * (i + 1));
        }
        return sum;
    }

    double eval(double z) const {
        double sum = 0.0, term = 1.0;
        const long n = term_count();
        for (long i = 0; i < n; ++i) {
            sum += term;
            term *= to_double(a + i) * to_double(b + i) * z / (to_double(c + i) * (i + 1));
        }
        return sum;
    }
};

inline Rational hyp2f1_terminating(const Rational& a, const Rational& b, const Rational& c,
                                   const Rational& z) {
    return TerminatingHypergeometric(a, b, c).eval(z);
}

/// Convergent Gauss series for |z| < 1 (used by the kernel evaluations near
/// the axis, where |z| <= 1/4).
inline double hyp2f1_series(double a, double b, double c, double z) {
    if (std::fabs(z) >= 1.0)
        throw std::domain_error("hyp2f1_series: requires |z| < 1");
    double sum = 0.0, term = 1.0;
    for (int i = 0; i < 4000; ++i) {
        sum += term;
        term *= (a + i) * (b + i) * z / ((c + i) * (i + 1));
        if (std::fabs(term) < 1e-18 * (1.0 + std::fabs(sum))) return sum + term;
    }
    throw EvaluationError("hyp2f1_series: no convergence within 4000 terms");
}

/// The real number i^k C_k^alpha(i w).  One factor i^2 = -1 enters per
/// recurrence step, turning the classical three-term recurrence into
///   G_k = ( -2 w (k + alpha - 1) G_{k-1} + (k + 2 alpha - 2) G_{k-2} ) / k,
/// G_0 = 1, G_1 = -2 alpha w.
template <class Scalar>
inline Scalar gegenbauer_imag(int k, const Scalar& alpha, const Scalar& w) {
    if (k < 0) throw std::domain_error("gegenbauer_imag: k must be >= 0");
    if (k == 0) return Scalar(1);
    Scalar gm2(1);
    Scalar gm1 = Scalar(-2) * alpha * w;
    if (k == 1) return gm1;
    for (int i = 2; i <= k; ++i) {
        Scalar g = (Scalar(-2) * w * (Scalar(i - 1) + alpha) * gm1 +
                    (Scalar(i - 2) + Scalar(2) * alpha) * gm2) /
                   Scalar(i);
        gm2 = gm1;
        gm1 = g;
    }
    return gm1;
}

inline Rational gegenbauer_imag_exact(int k, const Rational& alpha, const Rational& w) {
    return gegenbauer_imag<Rational>(k, alpha, w);
}

}  // namespace hspot
