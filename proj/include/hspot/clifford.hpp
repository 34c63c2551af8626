#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hspot/errors.hpp"
#include "hspot/rational.hpp"

namespace hspot {

/// Real Clifford algebra R_{0,m+1} over generators e_0 ... e_m with
/// e_a e_b + e_b e_a = -2 delta_ab.  Immutable after construction.
struct CliffordContext {
    int m;

    explicit CliffordContext(int m_) : m(m_) {
        if (m < 2) throw DimensionError("CliffordContext: m must be >= 2");
        if (m > 30) throw DimensionError("CliffordContext: m too large for blade masks");
    }
    bool operator==(const CliffordContext& o) const { return m == o.m; }
    int generator_count() const { return m + 1; }
};

namespace blade {

/// Sign from reordering e_A e_B into canonical ascending order, together with
/// the (-1) per repeated generator (signature (0, m+1)).
inline int product_sign(std::uint32_t a, std::uint32_t b) {
    int swaps = 0;
    std::uint32_t t = a >> 1;
    while (t) {
        swaps += std::popcount(t & b);
        t >>= 1;
    }
    swaps += std::popcount(a & b);  // e_i e_i = -1
    return (swaps & 1) ? -1 : 1;
}

inline std::string to_string(std::uint32_t mask) {
    if (mask == 0) return "1";
    std::string s = "e";
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) s += std::to_string(i);
    return s;
}

}  // namespace blade

/// Element of R_{0,m+1}: blade-indexed coefficient map.  Blade index-set
/// A = {j1 < ... < jh} is stored as the bitmask with bits j1..jh set.
/// Scalar is double on numeric paths, Rational on exact paths.
template <class Scalar>
class MultivectorT {
  public:
    explicit MultivectorT(CliffordContext ctx) : ctx_(ctx) {}

    static MultivectorT scalar(CliffordContext ctx, Scalar s) {
        MultivectorT r(ctx);
        r.set(0, std::move(s));
        return r;
    }
    static MultivectorT unit(CliffordContext ctx) { return scalar(ctx, Scalar(1)); }
    static MultivectorT basis(CliffordContext ctx, int index) {
        if (index < 0 || index > ctx.m)
            throw DimensionError("Multivector: generator index out of range");
        MultivectorT r(ctx);
        r.set(1u << index, Scalar(1));
        return r;
    }
    /// e0bar = -e0; Clifford conjugation negates grade-1 generators.
    static MultivectorT e0bar(CliffordContext ctx) {
        MultivectorT r(ctx);
        r.set(1u, Scalar(-1));
        return r;
    }
    /// x = x0 e_0 + x1 e_1 + ... + xm e_m
    static MultivectorT vector(CliffordContext ctx, const std::vector<Scalar>& comps) {
        if (static_cast<int>(comps.size()) != ctx.m + 1)
            throw DimensionError("Multivector: vector needs m+1 components");
        MultivectorT r(ctx);
        for (int i = 0; i <= ctx.m; ++i) r.set(1u << i, comps[i]);
        return r;
    }

    const CliffordContext& context() const { return ctx_; }
    const std::map<std::uint32_t, Scalar>& coefficients() const { return coeffs_; }

    Scalar coefficient(std::uint32_t mask) const {
        auto it = coeffs_.find(mask);
        return it == coeffs_.end() ? Scalar(0) : it->second;
    }

    void set(std::uint32_t mask, Scalar v) {
        check_mask(mask);
        if (v == Scalar(0))
            coeffs_.erase(mask);
        else
            coeffs_[mask] = std::move(v);
    }

    bool is_zero() const { return coeffs_.empty(); }

    int max_grade() const {
        int g = 0;
        for (const auto& [mask, c] : coeffs_) g = std::max(g, std::popcount(mask));
        return g;
    }

    MultivectorT operator+(const MultivectorT& o) const {
        require_same_context(o);
        MultivectorT r = *this;
        for (const auto& [mask, c] : o.coeffs_) r.set(mask, r.coefficient(mask) + c);
        return r;
    }
    MultivectorT operator-() const {
        MultivectorT r(ctx_);
        for (const auto& [mask, c] : coeffs_) r.coeffs_[mask] = -c;
        return r;
    }
    MultivectorT operator-(const MultivectorT& o) const { return *this + (-o); }

    MultivectorT operator*(const Scalar& s) const {
        MultivectorT r(ctx_);
        if (s == Scalar(0)) return r;
        for (const auto& [mask, c] : coeffs_) r.coeffs_[mask] = c * s;
        return r;
    }

    bool operator==(const MultivectorT& o) const {
        return ctx_ == o.ctx_ && coeffs_ == o.coeffs_;
    }

    void require_same_context(const MultivectorT& o) const {
        if (!(ctx_ == o.ctx_))
            throw DimensionError("Multivector: context mismatch (m=" + std::to_string(ctx_.m) +
                                 " vs m=" + std::to_string(o.ctx_.m) + ")");
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        os.precision(15);
        bool first = true;
        for (const auto& [mask, c] : coeffs_) {
            if (!first) os << " + ";
            os << c << "*" << blade::to_string(mask);
            first = false;
        }
        return os.str();
    }

  private:
    void check_mask(std::uint32_t mask) const {
        if (mask >> (ctx_.m + 1))
            throw DimensionError("Multivector: blade index exceeds m");
    }
    CliffordContext ctx_;
    std::map<std::uint32_t, Scalar> coeffs_;
};

template <class Scalar>
inline MultivectorT<Scalar> geometric_product(const MultivectorT<Scalar>& a,
                                              const MultivectorT<Scalar>& b) {
    a.require_same_context(b);
    MultivectorT<Scalar> r(a.context());
    for (const auto& [ma, ca] : a.coefficients()) {
        for (const auto& [mb, cb] : b.coefficients()) {
            const std::uint32_t mask = ma ^ mb;
            Scalar term = ca * cb;
            if (blade::product_sign(ma, mb) < 0) term = -term;
            r.set(mask, r.coefficient(mask) + term);
        }
    }
    return r;
}

template <class Scalar>
inline MultivectorT<Scalar> operator*(const MultivectorT<Scalar>& a,
                                      const MultivectorT<Scalar>& b) {
    return geometric_product(a, b);
}

/// Split f = f1 + e0bar * f2 with f1, f2 in the subalgebra generated by
/// e_1..e_m.  Since e_A with 0 in A factors as e_0 e_{A'} = -e0bar e_{A'},
/// the imaginary part picks up a sign.
template <class Scalar>
inline std::pair<MultivectorT<Scalar>, MultivectorT<Scalar>> paravector_split(
    const MultivectorT<Scalar>& f) {
    MultivectorT<Scalar> f1(f.context()), f2(f.context());
    for (const auto& [mask, c] : f.coefficients()) {
        if (mask & 1u)
            f2.set(mask & ~1u, -c);  // e_0 e_{A'} = -e0bar e_{A'}
        else
            f1.set(mask, c);
    }
    return {f1, f2};
}

template <class Scalar>
inline MultivectorT<Scalar> paravector_recompose(const MultivectorT<Scalar>& f1,
                                                 const MultivectorT<Scalar>& f2) {
    return f1 + MultivectorT<Scalar>::e0bar(f1.context()) * f2;
}

inline double mv_norm(const MultivectorT<double>& a) {
    double s = 0.0;
    for (const auto& [mask, c] : a.coefficients()) s += c * c;
    return std::sqrt(s);
}

using Multivector = MultivectorT<double>;
using MultivectorQ = MultivectorT<Rational>;

/// Point of the open upper half-space: x = x0 e_0 + xvec, x0 > 0.
struct HalfSpacePoint {
    double x0;
    std::vector<double> x;

    HalfSpacePoint(double x0_, std::vector<double> x_) : x0(x0_), x(std::move(x_)) {
        if (!(x0 > 0)) throw std::domain_error("HalfSpacePoint: x0 must be > 0");
    }

    int m() const { return static_cast<int>(x.size()); }

    double xvec_norm2() const {
        double s = 0.0;
        for (double c : x) s += c * c;
        return s;
    }
    double xvec_norm() const { return std::sqrt(xvec_norm2()); }
    double norm2() const { return x0 * x0 + xvec_norm2(); }
    double norm() const { return std::sqrt(norm2()); }

    HalfSpacePoint shifted(int axis, double delta) const {
        HalfSpacePoint p = *this;
        if (axis == 0)
            p.x0 += delta;
        else
            p.x[axis - 1] += delta;
        if (!(p.x0 > 0)) throw std::domain_error("HalfSpacePoint: shift crossed the boundary");
        return p;
    }
};

}  // namespace hspot
