#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hspot/errors.hpp"
#include "hspot/mpoly.hpp"
#include "hspot/rational.hpp"
#include "hspot/special_functions.hpp"

namespace hspot {

/// Polynomial in (t, u^2) with coefficients that are polynomials in m.
/// Monomial key: (power of t, power of u^2).  P_k and Q_k are homogeneous of
/// degree k when u carries weight 1 (t^a (u^2)^b has degree a + 2b).
class BivarPoly {
  public:
    using Key = std::pair<int, int>;

    BivarPoly() = default;

    static BivarPoly monomial(int t_pow, int u2_pow, MPoly coeff) {
        BivarPoly p;
        if (!coeff.is_zero()) p.terms_[{t_pow, u2_pow}] = std::move(coeff);
        return p;
    }

    const std::map<Key, MPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MPoly coeff(int t_pow, int u2_pow) const {
        auto it = terms_.find({t_pow, u2_pow});
        return it == terms_.end() ? MPoly() : it->second;
    }

    BivarPoly operator+(const BivarPoly& o) const {
        BivarPoly r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(k, c);
        return r;
    }
    BivarPoly operator-() const {
        BivarPoly r;
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }
    BivarPoly operator-(const BivarPoly& o) const { return *this + (-o); }

    BivarPoly scaled(const MPoly& s) const {
        BivarPoly r;
        for (const auto& [k, c] : terms_) {
            MPoly sc = c * s;
            if (!sc.is_zero()) r.terms_[k] = std::move(sc);
        }
        return r;
    }
    BivarPoly scaled(const Rational& s) const { return scaled(MPoly(s)); }

    BivarPoly shifted(int dt, int du2) const {
        BivarPoly r;
        for (const auto& [k, c] : terms_) r.terms_[{k.first + dt, k.second + du2}] = c;
        return r;
    }

    BivarPoly d_dt() const {
        BivarPoly r;
        for (const auto& [k, c] : terms_)
            if (k.first > 0) r.terms_[{k.first - 1, k.second}] = c * Rational(k.first);
        return r;
    }
    BivarPoly d_du2() const {
        BivarPoly r;
        for (const auto& [k, c] : terms_)
            if (k.second > 0) r.terms_[{k.first, k.second - 1}] = c * Rational(k.second);
        return r;
    }

    bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BivarPoly& o) const { return !(*this == o); }

    /// Exact evaluation at fixed dimension m and rational (t, u^2).
    Rational eval(long m, const Rational& t, const Rational& u2) const {
        Rational acc(0);
        for (const auto& [k, c] : terms_)
            acc += c.eval(m) * rational_pow(t, k.first) * rational_pow(u2, k.second);
        return acc;
    }

    double eval_double(long m, double t, double u2) const {
        double acc = 0.0;
        for (const auto& [k, c] : terms_)
            acc += to_double(c.eval(m)) * std::pow(t, k.first) * std::pow(u2, k.second);
        return acc;
    }

    int homogeneous_degree() const {
        int deg = -1;
        for (const auto& [k, c] : terms_) {
            int d = k.first + 2 * k.second;
            if (deg < 0) deg = d;
            if (d != deg) throw EvaluationError("BivarPoly: not homogeneous");
        }
        return deg;
    }

    /// Monomials sorted with the highest t-power first, as in the k-tables.
    std::vector<std::pair<Key, MPoly>> display_terms() const {
        std::vector<std::pair<Key, MPoly>> v(terms_.begin(), terms_.end());
        std::reverse(v.begin(), v.end());
        return v;
    }

    /// Rendering like "(m^2+m)*t^3 + (-3*m-3)*t*u^2".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : display_terms()) {
            if (!first) os << " + ";
            os << "(" << c.to_string() << ")";
            if (k.first > 0) {
                os << "*t";
                if (k.first > 1) os << "^" << k.first;
            }
            if (k.second > 0) {
                os << "*u^" << 2 * k.second;
            }
            first = false;
        }
        return os.str();
    }

  private:
    void add_term(const Key& k, const MPoly& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[k] = c;
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    std::map<Key, MPoly> terms_;
};

/// One step shared by both recurrences: p -> (t^2+u^2) d_t p - (m+2k-1) t p.
inline BivarPoly chain_recurrence_step(const BivarPoly& p, int k) {
    BivarPoly dp = p.d_dt();
    BivarPoly out = dp.shifted(2, 0) + dp.shifted(0, 1);
    out = out - p.shifted(1, 0).scaled(m_plus(2 * k - 1));
    return out;
}

/// P_k of A_{-k} = (2/sigma_{m+1}) |x|^{-(m+2k-1)} P_k(x_0, |x|^2):
/// P_1 = t, P_{k+1} = (t^2+u^2) d_t P_k - (m+2k-1) t P_k.
inline BivarPoly poly_P(int k) {
    if (k < 1) throw std::domain_error("poly_P: k must be >= 1");
    BivarPoly p = BivarPoly::monomial(1, 0, MPoly(Rational(1)));
    for (int i = 1; i < k; ++i) p = chain_recurrence_step(p, i);
    return p;
}

/// Q_k of B_{-k-1}: Q_0 = -1, Q_k = (t^2+u^2) d_t Q_{k-1} - (m+2k-1) t Q_{k-1}.
inline BivarPoly poly_Q(int k) {
    if (k < 0) throw std::domain_error("poly_Q: k must be >= 0");
    BivarPoly q = BivarPoly::monomial(0, 0, MPoly(Rational(-1)));
    for (int i = 1; i <= k; ++i) q = chain_recurrence_step(q, i);
    return q;
}

namespace detail {

inline Rational require_m(int m, int floor, const char* who) {
    if (m < floor)
        throw DimensionTooSmall(std::string(who) + ": requires m >= " + std::to_string(floor));
    return Rational(m);
}

}  // namespace detail

/// Gegenbauer closed form of P_k, evaluated exactly at rational (t, u) with
/// u != 0:
///   P_k(t,u^2) = (-1)^{k+1} 2^k k! / (m-1)
///                * [G(-m-2k+2)/G(-m-k+2)] [G((3-m)/2)/G((3-m)/2-k)]
///                * u^k (i^k C_k^{1-k-m/2})(i t/u).
/// The Gamma quotients are eps->0 limits, evaluated as falling products.
inline Rational poly_P_gegenbauer(int k, int m, const Rational& t, const Rational& u) {
    detail::require_m(m, 2, "poly_P_gegenbauer");
    if (k < 1) throw std::domain_error("poly_P_gegenbauer: k must be >= 1");
    if (u == 0) throw std::domain_error("poly_P_gegenbauer: u must be nonzero");
    Rational coeff(factorial(k) * (BigInt(1) << k), m - 1);
    if (k % 2 == 0) coeff = -coeff;
    coeff *= gamma_ratio_limit(m + 2 * k - 2, m + k - 2);  // G(-m-2k+2)/G(-m-k+2)
    coeff *= gamma_falling_ratio(3 - m, k);
    Rational alpha = Rational(2 - 2 * k - m, 2);
    Rational g = gegenbauer_imag_exact(k, alpha, t / u);
    return coeff * rational_pow(u, k) * g;
}

/// Gegenbauer closed form of Q_k (exact, u != 0):
///   Q_k(t,u^2) = (-1)^{k+1} 2^k k!
///                * [G(-m-2k)/G(-m-k)] [G((1-m)/2)/G((1-m)/2-k)]
///                * u^k (i^k C_k^{-k-m/2})(i t/u).
inline Rational poly_Q_gegenbauer(int k, int m, const Rational& t, const Rational& u) {
    detail::require_m(m, 2, "poly_Q_gegenbauer");
    if (k < 0) throw std::domain_error("poly_Q_gegenbauer: k must be >= 0");
    if (u == 0) throw std::domain_error("poly_Q_gegenbauer: u must be nonzero");
    Rational coeff(factorial(k) * (BigInt(1) << k));
    if (k % 2 == 0) coeff = -coeff;
    coeff *= gamma_ratio_limit(m + 2 * k, m + k);  // G(-m-2k)/G(-m-k)
    coeff *= gamma_falling_ratio(1 - m, k);
    Rational alpha = Rational(-2 * k - m, 2);
    Rational g = gegenbauer_imag_exact(k, alpha, t / u);
    return coeff * rational_pow(u, k) * g;
}

/// Hypergeometric closed form of P_k (exact, t != 0):
///   P_k(t,u^2) = -2^{2k} / (m-1)
///                * [G(-m-2k+2)/G(-m-k+2)] [G((3-m)/2)/G((3-m)/2-k)]
///                  [G((2-m)/2)/G((2-m)/2-k)]
///                * t^k 2F1(-k/2, (1-k)/2; m/2; -u^2/t^2).
inline Rational poly_P_hypergeometric(int k, int m, const Rational& t, const Rational& u) {
    detail::require_m(m, 2, "poly_P_hypergeometric");
    if (k < 1) throw std::domain_error("poly_P_hypergeometric: k must be >= 1");
    if (t == 0) throw std::domain_error("poly_P_hypergeometric: t must be nonzero");
    Rational coeff = -Rational(BigInt(1) << (2 * k), m - 1);
    coeff *= gamma_ratio_limit(m + 2 * k - 2, m + k - 2);
    coeff *= gamma_falling_ratio(3 - m, k);
    coeff *= gamma_falling_ratio(2 - m, k);
    Rational z = -u * u / (t * t);
    Rational f = hyp2f1_terminating(Rational(-k, 2), Rational(1 - k, 2), Rational(m, 2), z);
    return coeff * rational_pow(t, k) * f;
}

/// Hypergeometric closed form of Q_{k-1} (exact, t != 0), derived from the
/// Gegenbauer form through C_n^a(x) = (2x)^n G(a+n)/(G(a) n!)
///                                    * 2F1(-n/2, (1-n)/2; 1-a-n; x^{-2}):
///   Q_{k-1}(t,u^2) = -2^{2k-2}
///                    * [G(-m-2k+2)/G(-m-k+1)] [G((1-m)/2)/G((1-m)/2-(k-1))]
///                      [G(-m/2)/G(-m/2-(k-1))]
///                    * t^{k-1} 2F1(-(k-1)/2, 1-k/2; m/2+1; -u^2/t^2).
inline Rational poly_Q_hypergeometric(int k_minus_1, int m, const Rational& t, const Rational& u) {
    detail::require_m(m, 2, "poly_Q_hypergeometric");
    if (k_minus_1 < 0) throw std::domain_error("poly_Q_hypergeometric: index must be >= 0");
    if (t == 0) throw std::domain_error("poly_Q_hypergeometric: t must be nonzero");
    const int n = k_minus_1;
    Rational coeff = -Rational(BigInt(1) << (2 * n));
    coeff *= gamma_ratio_limit(m + 2 * n, m + n);
    coeff *= gamma_falling_ratio(1 - m, n);
    coeff *= gamma_falling_ratio(-m, n);
    Rational z = -u * u / (t * t);
    Rational f = hyp2f1_terminating(Rational(-n, 2), Rational(1 - n, 2), Rational(m + 2, 2), z);
    return coeff * rational_pow(t, n) * f;
}

}  // namespace hspot
