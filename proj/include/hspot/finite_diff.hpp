#pragma once

#include <cmath>
#include <functional>

#include "hspot/clifford.hpp"
#include "hspot/errors.hpp"

namespace hspot {

using KernelField = std::function<Multivector(const HalfSpacePoint&)>;

namespace detail {

inline void check_finite(const Multivector& v) {
    for (const auto& [mask, c] : v.coefficients())
        if (!std::isfinite(c)) throw EvaluationError("finite difference: non-finite kernel value in stencil");
}

}  // namespace detail

/// Central-difference partial derivative along axis (0 = x0, i = x_i).
inline Multivector partial_fd(const KernelField& f, const HalfSpacePoint& p, int axis, double h) {
    if (!(h > 0)) throw std::domain_error("partial_fd: h must be > 0");
    Multivector fp = f(p.shifted(axis, h));
    Multivector fm = f(p.shifted(axis, -h));
    detail::check_finite(fp);
    detail::check_finite(fm);
    return (fp - fm) * (0.5 / h);
}

/// Dirac operator by central differences: (dF)(p) ~ sum_a e_a d_{x_a} F.
inline Multivector dirac_fd(const KernelField& f, const HalfSpacePoint& p, double h) {
    CliffordContext ctx(p.m());
    Multivector acc(ctx);
    for (int axis = 0; axis <= p.m(); ++axis)
        acc = acc + Multivector::basis(ctx, axis) * partial_fd(f, p, axis, h);
    return acc;
}

/// Surface Dirac operator in the x-variables only: sum_{i>=1} e_i d_{x_i} F.
inline Multivector dirac_surface_fd(const KernelField& f, const HalfSpacePoint& p, double h) {
    CliffordContext ctx(p.m());
    Multivector acc(ctx);
    for (int axis = 1; axis <= p.m(); ++axis)
        acc = acc + Multivector::basis(ctx, axis) * partial_fd(f, p, axis, h);
    return acc;
}

/// Generalized Cauchy-Riemann operator D = (1/2)(d_{x0} + e0bar duls) by
/// central differences.
inline Multivector cauchy_riemann_fd(const KernelField& f, const HalfSpacePoint& p, double h) {
    CliffordContext ctx(p.m());
    Multivector d0 = partial_fd(f, p, 0, h);
    Multivector ds = dirac_surface_fd(f, p, h);
    return (d0 + Multivector::e0bar(ctx) * ds) * 0.5;
}

/// Conjugate operator Dbar = (1/2)(d_{x0} - e0bar duls).
inline Multivector cauchy_riemann_bar_fd(const KernelField& f, const HalfSpacePoint& p, double h) {
    CliffordContext ctx(p.m());
    Multivector d0 = partial_fd(f, p, 0, h);
    Multivector ds = dirac_surface_fd(f, p, h);
    return (d0 - Multivector::e0bar(ctx) * ds) * 0.5;
}

/// Laplacian in all m+1 variables by second central differences.
inline Multivector laplacian_fd(const KernelField& f, const HalfSpacePoint& p, double h) {
    CliffordContext ctx(p.m());
    Multivector center = f(p);
    detail::check_finite(center);
    Multivector acc(ctx);
    for (int axis = 0; axis <= p.m(); ++axis) {
        Multivector fp = f(p.shifted(axis, h));
        Multivector fm = f(p.shifted(axis, -h));
        detail::check_finite(fp);
        detail::check_finite(fm);
        acc = acc + (fp + fm - center * 2.0);
    }
    return acc * (1.0 / (h * h));
}

}  // namespace hspot
