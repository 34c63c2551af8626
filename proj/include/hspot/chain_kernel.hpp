#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "hspot/bivar_poly.hpp"
#include "hspot/clifford.hpp"
#include "hspot/errors.hpp"
#include "hspot/finite_diff.hpp"
#include "hspot/special_functions.hpp"
#include "hspot/symbolic_constant.hpp"

namespace hspot {

/// Scalar part A_n and Clifford-vector part B_n of a chain kernel at a point.
struct KernelValue {
    double a = 0.0;
    std::vector<double> b;
};

/// Smallest admissible m for kernel index n (A- and B-part separately).
/// Downstream and the center pair exist for every m >= 2; the upstream
/// closed forms need room for their denominators.
inline int chain_a_floor(int n) {
    switch (n) {
        case 1: return 3;
        case 2: return 4;
        default: return 2;
    }
}
inline int chain_b_floor(int n) {
    switch (n) {
        case 1: return 2;
        case 2: return 3;
        default: return 2;
    }
}
inline int chain_c_floor(int n) { return std::max(chain_a_floor(n), chain_b_floor(n)); }

namespace detail {

// Ratio |x_vec| / x0 below which the hypergeometric-in-(|x|^2/x0^2) forms
// replace the F_m forms (equal analytically, only the former is stable at
// the axis).
constexpr double kAxisSwitch = 0.5;

struct FixedPoly {
    struct Term {
        int t_pow;
        int u2_pow;
        double c;
    };
    std::vector<Term> terms;

    double eval(double t, double u2) const {
        double acc = 0.0;
        for (const auto& tm : terms) acc += tm.c * std::pow(t, tm.t_pow) * std::pow(u2, tm.u2_pow);
        return acc;
    }
};

inline FixedPoly fix_poly(const BivarPoly& p, int m) {
    FixedPoly fp;
    for (const auto& [key, c] : p.terms())
        fp.terms.push_back({key.first, key.second, to_double(c.eval(m))});
    return fp;
}

inline const FixedPoly& cached_P(int k, int m) {
    thread_local std::map<std::pair<int, int>, FixedPoly> cache;
    auto [it, inserted] = cache.try_emplace({k, m});
    if (inserted) it->second = fix_poly(poly_P(k), m);
    return it->second;
}

inline const FixedPoly& cached_Q(int k, int m) {
    thread_local std::map<std::pair<int, int>, FixedPoly> cache;
    auto [it, inserted] = cache.try_emplace({k, m});
    if (inserted) it->second = fix_poly(poly_Q(k), m);
    return it->second;
}

inline double two_over_sigma(int n) {
    return (SymbolicConstant::rational(Rational(2)) / sphere_area(n)).to_double();
}

inline void check_point(int m, const HalfSpacePoint& p) {
    if (p.m() != m) throw DimensionError("chain kernel: point dimension mismatch");
    if (!(p.norm2() > 0)) throw EvaluationError("chain kernel: singular at the origin");
}

}  // namespace detail

/// Downstream A_{-k}, B_{-k} for k >= 1 via the P_k / Q_{k-1} polynomials.
inline KernelValue eval_downstream(int n, int m, const HalfSpacePoint& p) {
    if (n > -1) throw std::domain_error("eval_downstream: n must be <= -1");
    const int k = -n;
    detail::check_point(m, p);
    const double cs = detail::two_over_sigma(m + 1);
    const double t = p.x0, u2 = p.xvec_norm2();
    const double rpow = std::pow(p.norm2(), 0.5 * (m + 2 * k - 1));
    KernelValue v;
    v.a = cs * detail::cached_P(k, m).eval(t, u2) / rpow;
    const double bf = cs * detail::cached_Q(k - 1, m).eval(t, u2) / rpow;
    v.b.resize(m);
    for (int i = 0; i < m; ++i) v.b[i] = bf * p.x[i];
    return v;
}

/// Green kernel A_0 and its conjugate harmonic B_0.
inline KernelValue eval_center(int m, const HalfSpacePoint& p) {
    detail::check_point(m, p);
    const double cs = detail::two_over_sigma(m + 1);
    KernelValue v;
    v.a = -cs / ((m - 1) * std::pow(p.norm2(), 0.5 * (m - 1)));
    v.b.resize(m);
    const double r = p.xvec_norm();
    double bf;
    if (r < detail::kAxisSwitch * p.x0) {
        const double z = -(r * r) / (p.x0 * p.x0);
        bf = (cs / m) * hyp2f1_series(0.5 * m, 0.5 * (m + 1), 0.5 * m + 1, z) /
             std::pow(p.x0, m);
    } else {
        bf = cs * f_m(m, r / p.x0) / std::pow(r, m);
    }
    for (int i = 0; i < m; ++i) v.b[i] = bf * p.x[i];
    return v;
}

namespace detail {

// F_{m-2}(v)/r^{m-2} and F_m(v)/r^m with v = r/x0, each stable on its side
// of the axis switch.
inline double fm2_over_rm2(int m, double x0, double r) {
    if (r < kAxisSwitch * x0) {
        const double z = -(r * r) / (x0 * x0);
        return hyp2f1_series(0.5 * m - 1, 0.5 * (m - 1), 0.5 * m, z) /
               ((m - 2) * std::pow(x0, m - 2));
    }
    return f_m(m - 2, r / x0) / std::pow(r, m - 2);
}

inline double fm_over_rm(int m, double x0, double r) {
    if (r < kAxisSwitch * x0) {
        const double z = -(r * r) / (x0 * x0);
        return hyp2f1_series(0.5 * m, 0.5 * (m + 1), 0.5 * m + 1, z) / (m * std::pow(x0, m));
    }
    return f_m(m, r / x0) / std::pow(r, m);
}

}  // namespace detail

/// Scalar factor g with B_n = g(x0, |x|) x for the upstream levels n = 1, 2;
/// defined down to the B-kernel floor.
inline double upstream_b_factor(int n, int m, const HalfSpacePoint& p) {
    if (n != 1 && n != 2)
        throw UnsupportedError("upstream_b_factor: only n = 1, 2 have closed forms");
    detail::check_point(m, p);
    if (m < chain_b_floor(n))
        throw DimensionTooSmall("B_" + std::to_string(n) + " requires m >= " +
                                std::to_string(chain_b_floor(n)));
    const double cs = detail::two_over_sigma(m + 1);
    const double r = p.xvec_norm(), x0 = p.x0;
    if (n == 1)
        return cs * x0 * detail::fm_over_rm(m, x0, r) -
               cs / ((m - 1) * std::pow(p.norm2(), 0.5 * (m - 1)));
    return 0.5 * cs * p.norm2() * detail::fm_over_rm(m, x0, r) -
           0.5 * cs * (m - 3.0) / (m - 1.0) * detail::fm2_over_rm2(m, x0, r);
}

/// Upstream A_1/B_1 (logarithmic level) and A_2/B_2, closed forms.
inline KernelValue eval_upstream(int n, int m, const HalfSpacePoint& p) {
    if (n != 1 && n != 2)
        throw UnsupportedError("eval_upstream: closed form unavailable for n = " +
                               std::to_string(n) + " (only n = 1, 2)");
    detail::check_point(m, p);
    if (m < chain_c_floor(n))
        throw DimensionTooSmall("eval_upstream: A_" + std::to_string(n) + " requires m >= " +
                                std::to_string(chain_a_floor(n)) + ", B_" + std::to_string(n) +
                                " m >= " + std::to_string(chain_b_floor(n)));
    const double cs = detail::two_over_sigma(m + 1);
    const double r = p.xvec_norm(), x0 = p.x0;
    KernelValue out;
    out.b.resize(m);
    if (n == 1) {
        out.a = cs / (m - 1) * detail::fm2_over_rm2(m, x0, r);
    } else {
        out.a = cs / (m - 1) * x0 * detail::fm2_over_rm2(m, x0, r) -
                cs / ((m - 1) * (m - 3) * std::pow(p.norm2(), 0.5 * (m - 3)));
    }
    const double bf = upstream_b_factor(n, m, p);
    for (int i = 0; i < m; ++i) out.b[i] = bf * p.x[i];
    return out;
}

/// A_n, B_n at a point; dispatches on the sign of the chain index.
inline KernelValue eval_chain(int n, int m, const HalfSpacePoint& p) {
    if (n <= -1) return eval_downstream(n, m, p);
    if (n == 0) return eval_center(m, p);
    return eval_upstream(n, m, p);
}

/// C_n = (1/2) A_n + (1/2) e0bar B_n as a Multivector.
inline Multivector eval_C(int n, int m, const HalfSpacePoint& p) {
    if (n > 2)
        throw UnsupportedError("eval_C: upstream closed form unavailable for n = " +
                               std::to_string(n));
    if (m < chain_c_floor(n))
        throw DimensionTooSmall("eval_C: C_" + std::to_string(n) + " requires m >= " +
                                std::to_string(chain_c_floor(n)));
    KernelValue kv = eval_chain(n, m, p);
    CliffordContext ctx(m);
    Multivector bvec(ctx);
    for (int i = 0; i < m; ++i) bvec.set(1u << (i + 1), kv.b[i]);
    return Multivector::scalar(ctx, 0.5 * kv.a) + Multivector::e0bar(ctx) * (bvec * 0.5);
}

/// Kernel field C_n as a callable for the finite-difference harness.
inline KernelField chain_field(int n, int m) {
    return [n, m](const HalfSpacePoint& p) { return eval_C(n, m, p); };
}

enum class KernelKind { A, B, C };

/// A chain member pinned to (n, m, kind), validated on construction.
struct ChainKernel {
    int n;
    int m;
    KernelKind kind;

    ChainKernel(int n_, int m_, KernelKind kind_) : n(n_), m(m_), kind(kind_) {
        if (n > 2)
            throw UnsupportedError("ChainKernel: no closed form upstream of n = 2");
        const int floor = (kind == KernelKind::A)   ? chain_a_floor(n)
                          : (kind == KernelKind::B) ? chain_b_floor(n)
                                                    : chain_c_floor(n);
        if (m < floor)
            throw DimensionTooSmall("ChainKernel: kernel " + std::to_string(n) +
                                    " requires m >= " + std::to_string(floor));
    }

    double scalar_at(const HalfSpacePoint& p) const {
        if (kind != KernelKind::A) throw UnsupportedError("ChainKernel: not an A-kernel");
        return eval_chain(n, m, p).a;
    }
    std::vector<double> vector_at(const HalfSpacePoint& p) const {
        if (kind != KernelKind::B) throw UnsupportedError("ChainKernel: not a B-kernel");
        if (n >= 1 && m < chain_a_floor(n)) {  // B exists below the A-floor
            const double bf = upstream_b_factor(n, m, p);
            std::vector<double> b(m);
            for (int i = 0; i < m; ++i) b[i] = bf * p.x[i];
            return b;
        }
        return eval_chain(n, m, p).b;
    }
    Multivector multivector_at(const HalfSpacePoint& p) const {
        if (kind != KernelKind::C) throw UnsupportedError("ChainKernel: not a C-kernel");
        return eval_C(n, m, p);
    }
};

}  // namespace hspot
