#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hspot/errors.hpp"
#include "hspot/rational.hpp"
#include "hspot/symbolic_constant.hpp"

namespace hspot {

enum class Family { T, U };

inline const char* family_name(Family f) { return f == Family::T ? "T*" : "U*"; }

/// T*_{-m-2l} (l >= 0) is a multiple of (-Delta)^l delta, and U*_{-m-2l-1}
/// of duls^{2l+1} delta; those members have no regular function
/// representative and convolve by derivative action instead of the
/// c_m-formulas.
inline bool is_delta_type(Family f, int lambda, int m) {
    if (f == Family::T) return lambda <= -m && (lambda + m) % 2 == 0;
    return lambda <= -m - 1 && (lambda + m + 1) % 2 == 0;
}

/// Finite linear combination over the basis {T*_lambda} u {U*_lambda} with
/// exact coefficients; the scalar-valued (T*) and Clifford-vector valued (U*)
/// parts live in one term map keyed by (family, lambda).
class BoundaryDistribution {
  public:
    using Key = std::pair<Family, int>;

    explicit BoundaryDistribution(int m) : m_(m) {
        if (m < 2) throw DimensionError("BoundaryDistribution: m must be >= 2");
    }

    static BoundaryDistribution term(int m, Family f, int lambda, SymbolicConstant coeff) {
        BoundaryDistribution d(m);
        d.add(f, lambda, std::move(coeff));
        return d;
    }

    int m() const { return m_; }
    const std::map<Key, SymbolicConstant>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool pure(Family f) const {
        for (const auto& [k, c] : terms_)
            if (k.first != f) return false;
        return true;
    }

    bool has_delta_type() const {
        for (const auto& [k, c] : terms_)
            if (is_delta_type(k.first, k.second, m_)) return true;
        return false;
    }

    void add(Family f, int lambda, const SymbolicConstant& coeff) {
        if (coeff.is_zero()) return;
        Key k{f, lambda};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[k] = coeff;
            return;
        }
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }

    BoundaryDistribution operator+(const BoundaryDistribution& o) const {
        require_same_m(o);
        BoundaryDistribution r = *this;
        for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, c);
        return r;
    }
    BoundaryDistribution operator-() const {
        BoundaryDistribution r(m_);
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }
    BoundaryDistribution operator-(const BoundaryDistribution& o) const { return *this + (-o); }

    BoundaryDistribution scaled(const SymbolicConstant& s) const {
        BoundaryDistribution r(m_);
        if (s.is_zero()) return r;
        for (const auto& [k, c] : terms_) r.terms_[k] = c * s;
        return r;
    }

    bool operator==(const BoundaryDistribution& o) const {
        return m_ == o.m_ && terms_ == o.terms_;
    }
    bool operator!=(const BoundaryDistribution& o) const { return !(*this == o); }

    void require_same_m(const BoundaryDistribution& o) const {
        if (m_ != o.m_) throw DimensionError("BoundaryDistribution: dimension mismatch");
    }

    /// Canonical text form "coeff * T*[lambda] + coeff * U*[lambda]",
    /// T-terms first, lambda ascending.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            os << c.to_string() << " * " << family_name(k.first) << "[" << k.second << "]";
            first = false;
        }
        return os.str();
    }

  private:
    int m_;
    std::map<Key, SymbolicConstant> terms_;
};

// ---------------------------------------------------------------------------
// Derivation and multiplication rules (all lambda):
//   duls T*_l = l U*_{l-1}         duls U*_l = -2pi T*_{l-1}
//   x T*_l  = (l+m)/(2pi) U*_{l+1} x U*_l  = -T*_{l+1}
//   r^2 T*_l = (l+m)/(2pi) T*_{l+2}   r^2 U*_l = (l+m+1)/(2pi) U*_{l+2}
// ---------------------------------------------------------------------------

inline BoundaryDistribution dirac_action(const BoundaryDistribution& d) {
    BoundaryDistribution r(d.m());
    for (const auto& [k, c] : d.terms()) {
        if (k.first == Family::T)
            r.add(Family::U, k.second - 1, c * SymbolicConstant::rational(Rational(k.second)));
        else
            r.add(Family::T, k.second - 1, c * SymbolicConstant(Rational(-2), 2));
    }
    return r;
}

inline BoundaryDistribution multiply_x(const BoundaryDistribution& d) {
    BoundaryDistribution r(d.m());
    for (const auto& [k, c] : d.terms()) {
        if (k.first == Family::T)
            r.add(Family::U, k.second + 1,
                  c * SymbolicConstant(Rational(k.second + d.m(), 2), -2));
        else
            r.add(Family::T, k.second + 1, -c);
    }
    return r;
}

inline BoundaryDistribution multiply_r2(const BoundaryDistribution& d) {
    BoundaryDistribution r(d.m());
    for (const auto& [k, c] : d.terms()) {
        if (k.first == Family::T)
            r.add(Family::T, k.second + 2,
                  c * SymbolicConstant(Rational(k.second + d.m(), 2), -2));
        else
            r.add(Family::U, k.second + 2,
                  c * SymbolicConstant(Rational(k.second + d.m() + 1, 2), -2));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Convolution
// ---------------------------------------------------------------------------

namespace detail {

/// c_m(alpha, beta) = pi^{m/2} Gamma(-(alpha+beta+m)/2)
///                    / ( Gamma(-alpha/2) Gamma(-beta/2) )
inline SymbolicConstant conv_constant(int m, int alpha, int beta) {
    SymbolicConstant num = SymbolicConstant::pi_half_power(m) * gamma_half_any(-(alpha + beta + m));
    return num / gamma_half_any(-alpha) / gamma_half_any(-beta);
}

/// Prefactor and derivative order of a delta-type term:
///   T*_{-m-2l}   = pi^{m/2-l} / (2^{2l}   Gamma(m/2+l))   * duls^{2l}  delta
///   U*_{-m-2l-1} = -pi^{m/2-l} / (2^{2l+1} Gamma(m/2+l+1)) * duls^{2l+1} delta
struct DeltaForm {
    SymbolicConstant prefactor;
    int order;
};

inline DeltaForm delta_form(Family f, int lambda, int m) {
    if (f == Family::T) {
        const int l = (-lambda - m) / 2;
        SymbolicConstant pre(Rational(1, BigInt(1) << (2 * l)), m - 2 * l);
        return {pre / gamma_half(m + 2 * l), 2 * l};
    }
    const int l = (-lambda - m - 1) / 2;
    SymbolicConstant pre(Rational(-1, BigInt(1) << (2 * l + 1)), m - 2 * l);
    return {pre / gamma_half(m + 2 * l + 2), 2 * l + 1};
}

inline bool is_even_nonneg(int n) { return n >= 0 && n % 2 == 0; }
inline bool is_odd_nonneg(int n) { return n >= 1 && n % 2 == 1; }

inline void check_exclusions(Family fa, int alpha, Family fb, int beta, int m) {
    auto fail = [&](const std::string& cond) {
        std::ostringstream os;
        os << "convolution " << family_name(fa) << "[" << alpha << "] * " << family_name(fb)
           << "[" << beta << "] undefined: violates " << cond;
        throw ConvolutionUndefined(os.str());
    };
    const int out = alpha + beta + m;
    if (fa == Family::T && fb == Family::T) {
        if (is_even_nonneg(alpha)) fail("alpha != 2j (T*T rule)");
        if (is_even_nonneg(beta)) fail("beta != 2k (T*T rule)");
        if (is_even_nonneg(out)) fail("alpha+beta+m != 2l (T*T rule)");
    } else if (fa == Family::U && fb == Family::U) {
        if (is_odd_nonneg(alpha)) fail("alpha != 2j+1 (U*U rule)");
        if (is_odd_nonneg(beta)) fail("beta != 2k+1 (U*U rule)");
        if (is_even_nonneg(out)) fail("alpha+beta != -m+2l (U*U rule)");
    } else {
        // mixed: alpha names the U-index, beta the T-index
        if (is_odd_nonneg(alpha)) fail("alpha != 2j+1 (U*T rule)");
        if (is_even_nonneg(beta)) fail("beta != 2k (U*T rule)");
        if (is_odd_nonneg(out)) fail("alpha+beta != -m+2l+1 (U*T rule)");
    }
}

/// Single-term convolution through the c_m-formulas (both terms regular).
inline BoundaryDistribution convolve_regular(Family fa, int alpha, const SymbolicConstant& ca,
                                             Family fb, int beta, const SymbolicConstant& cb,
                                             int m) {
    if (fa == Family::T && fb == Family::U)
        return convolve_regular(fb, beta, cb, fa, alpha, ca, m);  // T*U = U*T
    check_exclusions(fa, alpha, fb, beta, m);
    const int out = alpha + beta + m;
    SymbolicConstant coeff = ca * cb;
    if (fa == Family::T && fb == Family::T) {
        coeff = coeff * conv_constant(m, alpha, beta);
        return BoundaryDistribution::term(m, Family::T, out, coeff);
    }
    if (fa == Family::U && fb == Family::U) {
        SymbolicConstant c = SymbolicConstant::pi_half_power(m + 2) *
                             gamma_half_any(-(alpha + beta + m)) /
                             gamma_half_any(1 - alpha) / gamma_half_any(1 - beta);
        return BoundaryDistribution::term(m, Family::T, out, coeff * c);
    }
    // U(alpha) * T(beta)
    coeff = coeff * conv_constant(m, alpha - 1, beta);
    return BoundaryDistribution::term(m, Family::U, out, coeff);
}

}  // namespace detail

/// Exact convolution of two distributions.  Delta-type terms act by (Dirac)
/// differentiation of the other operand, which sidesteps the exclusion set of
/// the convolution constants; all remaining pairs go through the c_m-formulas,
/// whose parameter exclusions are enforced.  Where both routes apply they
/// agree (see the unit tests).
inline BoundaryDistribution convolve(const BoundaryDistribution& d1,
                                     const BoundaryDistribution& d2) {
    d1.require_same_m(d2);
    const int m = d1.m();
    BoundaryDistribution out(m);
    for (const auto& [k1, c1] : d1.terms()) {
        for (const auto& [k2, c2] : d2.terms()) {
            const bool delta1 = is_delta_type(k1.first, k1.second, m);
            const bool delta2 = is_delta_type(k2.first, k2.second, m);
            if (delta1 || delta2) {
                const auto& dk = delta1 ? k1 : k2;
                const auto& ok = delta1 ? k2 : k1;
                const auto& dc = delta1 ? c1 : c2;
                const auto& oc = delta1 ? c2 : c1;
                auto form = detail::delta_form(dk.first, dk.second, m);
                BoundaryDistribution other = BoundaryDistribution::term(m, ok.first, ok.second, oc);
                for (int i = 0; i < form.order; ++i) other = dirac_action(other);
                out = out + other.scaled(dc * form.prefactor);
            } else {
                out = out + detail::convolve_regular(k1.first, k1.second, c1, k2.first, k2.second,
                                                     c2, m);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Named distributions
// ---------------------------------------------------------------------------

/// delta = (2/sigma_m) T*_{-m}
inline BoundaryDistribution delta_dist(int m) {
    SymbolicConstant c = SymbolicConstant::rational(Rational(2)) / sphere_area(m);
    return BoundaryDistribution::term(m, Family::T, -m, c);
}

/// Hilbert kernel H = -(2/sigma_{m+1}) U*_{-m}
inline BoundaryDistribution hilbert_kernel(int m) {
    SymbolicConstant c = SymbolicConstant::rational(Rational(-2)) / sphere_area(m + 1);
    return BoundaryDistribution::term(m, Family::U, -m, c);
}

inline BoundaryDistribution hilbert(const BoundaryDistribution& d) {
    return convolve(hilbert_kernel(d.m()), d);
}

namespace detail {

inline Rational falling_odd_product(int m, int j, int start) {
    // start=1: (m-1)(m-3)...(m-2j+1), j factors; start=2: (m-2)(m-4)...(m-2j).
    Rational acc(1);
    for (int i = 0; i < j; ++i) {
        const int factor = m - start - 2 * i;
        if (factor <= 0)
            throw DimensionTooSmall("boundary value undefined: factor m-" +
                                    std::to_string(start + 2 * i) + " = " +
                                    std::to_string(factor) + " must be positive");
        acc *= factor;
    }
    return acc;
}

}  // namespace detail

/// Exact boundary values (a_n, b_n) of the chain kernels, n in Z.
inline std::pair<BoundaryDistribution, BoundaryDistribution> boundary_value(int n, int m) {
    if (m < 2) throw DimensionError("boundary_value: m must be >= 2");
    const SymbolicConstant two(Rational(2), 0);
    if (n <= -1) {
        const int k = -n;
        if (k % 2 == 1) {  // a_{-2l-1} = duls^{2l} delta, b_{-2l-1} = duls^{2l} H
            const int l = (k - 1) / 2;
            SymbolicConstant ca(Rational(BigInt(1) << (2 * l)), -(m - 2 * l));
            ca = ca * gamma_half(m + 2 * l);
            SymbolicConstant cb(Rational(-(BigInt(1) << (2 * l))), -(m - 2 * l + 1));
            cb = cb * gamma_half(m + 2 * l + 1);
            return {BoundaryDistribution::term(m, Family::T, -m - 2 * l, ca),
                    BoundaryDistribution::term(m, Family::U, -m - 2 * l, cb)};
        }
        const int l = k / 2;  // a_{-2l} = (-duls)^{2l-1} H, b_{-2l} = (-duls)^{2l-1} delta
        SymbolicConstant ca(Rational(-(BigInt(1) << (2 * l - 1))), -(m - 2 * l + 1));
        ca = ca * gamma_half(m + 2 * l - 1);
        SymbolicConstant cb(Rational(BigInt(1) << (2 * l - 1)), -(m - 2 * l + 2));
        cb = cb * gamma_half(m + 2 * l);
        return {BoundaryDistribution::term(m, Family::T, -m - 2 * l + 1, ca),
                BoundaryDistribution::term(m, Family::U, -m - 2 * l + 1, cb)};
    }
    if (n == 0) {
        SymbolicConstant ca = -(two / (sphere_area(m + 1) * SymbolicConstant::rational(m - 1)));
        SymbolicConstant cb = SymbolicConstant(Rational(1), -2) / sphere_area(m);
        return {BoundaryDistribution::term(m, Family::T, -m + 1, ca),
                BoundaryDistribution::term(m, Family::U, -m + 1, cb)};
    }
    if (n % 2 == 0) {  // n = 2j
        const int j = n / 2;
        Rational pa = detail::falling_odd_product(m, j + 1, 1);  // (m-1)...(m-2j-1)
        SymbolicConstant ca(Rational(-1) / (Rational(BigInt(1) << (j - 1)) * pa), -2 * j);
        ca = ca / sphere_area(m + 1);
        Rational pb = detail::falling_odd_product(m, j, 2);  // (m-2)...(m-2j)
        SymbolicConstant cb(Rational(1) / (Rational(BigInt(1) << j) * pb), -2 * (j + 1));
        cb = cb / sphere_area(m);
        return {BoundaryDistribution::term(m, Family::T, -m + 2 * j + 1, ca),
                BoundaryDistribution::term(m, Family::U, -m + 2 * j + 1, cb)};
    }
    const int j = (n + 1) / 2;  // n = 2j-1
    Rational pa = detail::falling_odd_product(m, j, 2);  // (m-2)...(m-2j)
    SymbolicConstant ca(Rational(1) / (Rational(BigInt(1) << (j - 1)) * pa), -2 * j);
    ca = ca / sphere_area(m);
    Rational pb = detail::falling_odd_product(m, j, 1);  // (m-1)...(m-2j+1)
    SymbolicConstant cb(Rational(-1) / (Rational(BigInt(1) << (j - 1)) * pb), -2 * j);
    cb = cb / sphere_area(m + 1);
    return {BoundaryDistribution::term(m, Family::T, -m + 2 * j, ca),
            BoundaryDistribution::term(m, Family::U, -m + 2 * j, cb)};
}

inline BoundaryDistribution boundary_a(int n, int m) { return boundary_value(n, m).first; }
inline BoundaryDistribution boundary_b(int n, int m) { return boundary_value(n, m).second; }

// ---------------------------------------------------------------------------
// Regular-function representatives (pointwise values away from the origin)
// ---------------------------------------------------------------------------

/// Pointwise value at radius r of the regular part: (scalar, radial) where
/// the vector part is radial * x/|x|.  Delta-type terms vanish away from the
/// origin and contribute nothing.
struct RepresentativeValue {
    double scalar = 0.0;
    double radial = 0.0;
};

inline RepresentativeValue representative_value(const BoundaryDistribution& d, double r) {
    if (!(r > 0)) throw std::domain_error("representative_value: r must be > 0");
    RepresentativeValue out;
    const int m = d.m();
    for (const auto& [k, c] : d.terms()) {
        if (is_delta_type(k.first, k.second, m)) continue;
        if (k.first == Family::T) {
            SymbolicConstant norm = SymbolicConstant::pi_half_power(k.second + m) /
                                    gamma_half_any(k.second + m);
            out.scalar += (c * norm).to_double() * std::pow(r, k.second);
        } else {
            SymbolicConstant norm = SymbolicConstant::pi_half_power(k.second + m + 1) /
                                    gamma_half_any(k.second + m + 1);
            out.radial += (c * norm).to_double() * std::pow(r, k.second);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Paravector combinations c = (1/2) a + (1/2) e0bar b
// ---------------------------------------------------------------------------

/// Pair (s, v) representing s + e0bar v with s scalar-valued (T*-terms) and
/// v Clifford-vector valued (U*-terms).  The 1/2 weights of c_n live in the
/// stored distributions.
struct Paravector {
    BoundaryDistribution s;
    BoundaryDistribution v;

    Paravector(BoundaryDistribution s_, BoundaryDistribution v_)
        : s(std::move(s_)), v(std::move(v_)) {
        s.require_same_m(v);
        if (!s.pure(Family::T) || !v.pure(Family::U))
            throw DimensionError("Paravector: s must be T*-valued and v U*-valued");
    }

    int m() const { return s.m(); }

    bool operator==(const Paravector& o) const { return s == o.s && v == o.v; }
    bool operator!=(const Paravector& o) const { return !(*this == o); }

    std::string to_string() const {
        return "(" + s.to_string() + ") + e0bar (" + v.to_string() + ")";
    }
};

inline Paravector c_n(int n, int m) {
    auto [a, b] = boundary_value(n, m);
    SymbolicConstant half(Rational(1, 2), 0);
    return {a.scaled(half), b.scaled(half)};
}

/// (s + e0bar v) * (s' + e0bar v'); the cross terms commute e0bar past one
/// vector factor each, giving s*s' + v*v' + e0bar (s*v' + v*s').
inline Paravector convolve(const Paravector& c1, const Paravector& c2) {
    return {convolve(c1.s, c2.s) + convolve(c1.v, c2.v),
            convolve(c1.s, c2.v) + convolve(c1.v, c2.s)};
}

/// c * d for scalar-valued d (and d * c; T-convolutions are commutative).
inline Paravector convolve_scalar(const Paravector& c, const BoundaryDistribution& d) {
    if (!d.pure(Family::T))
        throw DimensionError("convolve_scalar: d must be scalar (T*) valued");
    return {convolve(c.s, d), convolve(c.v, d)};
}

/// c * (e0bar b) = (e0bar b) * c for vector-valued b.
inline Paravector convolve_e0_vector(const Paravector& c, const BoundaryDistribution& b) {
    if (!b.pure(Family::U))
        throw DimensionError("convolve_e0_vector: b must be vector (U*) valued");
    return {convolve(c.v, b), convolve(c.s, b)};
}

/// -e0bar duls c = (-duls v) + e0bar (-duls s).
inline Paravector minus_e0_dirac(const Paravector& c) {
    return {-dirac_action(c.v), -dirac_action(c.s)};
}

/// e0bar H[c] = (H * v) + e0bar (H * s).
inline Paravector e0_hilbert(const Paravector& c) {
    BoundaryDistribution H = hilbert_kernel(c.m());
    return {convolve(H, c.v), convolve(H, c.s)};
}

}  // namespace hspot
