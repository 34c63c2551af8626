#pragma once

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "hspot/errors.hpp"

namespace hspot {

namespace detail {

// 7-point Gauss / 15-point Kronrod pair on [-1, 1].
struct GK15 {
    static constexpr double xk[8] = {
        0.000000000000000000, 0.207784955007898468, 0.405845151377397167,
        0.586087235467691130, 0.741531185599394440, 0.864864423359769073,
        0.949107912342758525, 0.991455371120812639};
    static constexpr double wk[8] = {
        0.209482141084727828, 0.204432940075298892, 0.190350578064785410,
        0.169004726639267903, 0.140653259715525919, 0.104790010322250184,
        0.063092092629978553, 0.022935322010529225};
    static constexpr double wg[4] = {
        0.417959183673469388, 0.381830050505118945, 0.279705391489276668,
        0.129484966168869693};
};

template <class F>
inline std::pair<double, double> gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double f0 = f(c);
    double kron = GK15::wk[0] * f0;
    double gauss = GK15::wg[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = h * GK15::xk[i];
        const double fsum = f(c - dx) + f(c + dx);
        kron += GK15::wk[i] * fsum;
        if (i % 2 == 0) gauss += GK15::wg[i / 2] * fsum;
    }
    kron *= h;
    gauss *= h;
    return {kron, std::fabs(kron - gauss)};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b].
template <class F>
inline double integrate(const F& f, double a, double b, double tol = 1e-12,
                        int max_depth = 60) {
    struct Frame {
        double a, b;
        int depth;
    };
    std::vector<Frame> stack{{a, b, 0}};
    double total = 0.0;
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        auto [val, err] = detail::gk15(f, fr.a, fr.b);
        if (err < tol * std::max(1.0, std::fabs(val)) || fr.depth >= max_depth) {
            if (fr.depth >= max_depth && err > 1e-6)
                throw EvaluationError("integrate: failed to converge");
            total += val;
            continue;
        }
        const double mid = 0.5 * (fr.a + fr.b);
        stack.push_back({fr.a, mid, fr.depth + 1});
        stack.push_back({mid, fr.b, fr.depth + 1});
    }
    return total;
}

/// Integral of f over [a, +inf) via the substitution t = a + s/(1-s).
template <class F>
inline double integrate_to_infinity(const F& f, double a, double tol = 1e-12) {
    auto g = [&](double s) {
        const double one_minus = 1.0 - s;
        const double t = a + s / one_minus;
        return f(t) / (one_minus * one_minus);
    };
    return integrate(g, 0.0, 1.0, tol);
}

}  // namespace hspot
