#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hspot/chain_kernel.hpp"
#include "hspot/distribution.hpp"
#include "hspot/finite_diff.hpp"

namespace hspot {

/// One row of the verification CSV.
struct ResidualReport {
    std::string test_id;
    int n = 0;
    int m = 0;
    double h_or_x0 = 0.0;
    double residual = 0.0;
    double order = 0.0;
    bool pass = false;
};

inline std::string residual_csv_header() { return "test_id,n,m,h_or_x0,residual,order,pass"; }

inline std::string residual_csv_row(const ResidualReport& r) {
    std::ostringstream os;
    os.precision(15);
    os << r.test_id << "," << r.n << "," << r.m << "," << r.h_or_x0 << "," << r.residual << ","
       << r.order << "," << (r.pass ? "1" : "0");
    return os.str();
}

/// Grid parameters for the limit studies and the quadrature demo.  The
/// extent margin keeps singular kernels away from the origin node.
struct GridSpec {
    int m;
    int resolution;
    double extent;
    std::vector<double> x0_levels;

    GridSpec(int m_ = 2, int resolution_ = 960, double extent_ = 6.0,
             std::vector<double> x0_levels_ = {0.1, 0.05, 0.01, 0.005})
        : m(m_), resolution(resolution_), extent(extent_), x0_levels(std::move(x0_levels_)) {
        if (m < 2 || m > 3) throw DimensionError("GridSpec: m must be 2 or 3");
        if (resolution < 16) throw std::domain_error("GridSpec: resolution must be >= 16");
        if (!(extent > 0)) throw std::domain_error("GridSpec: extent must be > 0");
    }
};

/// Random interior points: x0 in [0.5, 1.2], |x| in [1.0, 1.7].  Every
/// stencil point stays well inside the half-space, away from the axis (no
/// representation switch inside a stencil) and at unit scale.
inline std::vector<HalfSpacePoint> sample_interior_points(int m, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux0(0.5, 1.2), ur(1.0, 1.7), ucomp(-1.0, 1.0);
    std::vector<HalfSpacePoint> pts;
    pts.reserve(count);
    while (static_cast<int>(pts.size()) < count) {
        std::vector<double> dir(m);
        double norm2 = 0.0;
        for (double& d : dir) {
            d = ucomp(rng);
            norm2 += d * d;
        }
        if (norm2 < 1e-3) continue;
        const double r = ur(rng) / std::sqrt(norm2);
        for (double& d : dir) d *= r;
        pts.emplace_back(ux0(rng), std::move(dir));
    }
    return pts;
}

/// HSPOT_TOL overrides a residual tolerance when set to a positive value.
inline double tolerance_from_env(double fallback) {
    if (const char* s = std::getenv("HSPOT_TOL")) {
        const double t = std::atof(s);
        if (t > 0) return t;
    }
    return fallback;
}

namespace detail {

inline int env_thread_count() {
    if (const char* s = std::getenv("HSPOT_THREADS")) {
        const int t = std::atoi(s);
        if (t > 1) return std::min(t, 64);
    }
    return 1;
}

/// max of fn over the points, split across HSPOT_THREADS workers.
inline double max_over_points(const std::vector<HalfSpacePoint>& pts,
                              const std::function<double(const HalfSpacePoint&)>& fn) {
    const int threads = env_thread_count();
    if (threads <= 1) {
        double worst = 0.0;
        for (const auto& p : pts) worst = std::max(worst, fn(p));
        return worst;
    }
    std::vector<double> partial(threads, 0.0);
    std::vector<std::thread> pool;
    const size_t chunk = (pts.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            const size_t lo = t * chunk, hi = std::min(pts.size(), lo + chunk);
            for (size_t i = lo; i < hi; ++i) partial[t] = std::max(partial[t], fn(pts[i]));
        });
    }
    for (auto& th : pool) th.join();
    return *std::max_element(partial.begin(), partial.end());
}

inline double order_estimate(double r1, double r2, double r4) {
    if (r1 <= 0 || r2 <= 0 || r4 <= 0) return 0.0;
    return 0.5 * (std::log2(r2 / r1) + std::log2(r4 / r2));
}

inline Multivector scalar_field_A(int n, int m, const HalfSpacePoint& p) {
    return Multivector::scalar(CliffordContext(m), eval_chain(n, m, p).a);
}

inline Multivector vector_field_B(int n, int m, const HalfSpacePoint& p) {
    CliffordContext ctx(m);
    Multivector v(ctx);
    KernelValue kv = eval_chain(n, m, p);
    for (int i = 0; i < m; ++i) v.set(1u << (i + 1), kv.b[i]);
    return v;
}

}  // namespace detail

/// max |D C_n| over the sample by central differences; exact monogenicity
/// makes the whole value the O(h^2) truncation residual.
inline ResidualReport check_monogenic(int n, int m, int samples, double h, double tol,
                                      std::uint64_t seed = 0) {
    auto pts = sample_interior_points(m, samples, seed);
    KernelField field = chain_field(n, m);
    auto residual_at = [&](double step) {
        return detail::max_over_points(
            pts, [&](const HalfSpacePoint& p) { return mv_norm(cauchy_riemann_fd(field, p, step)); });
    };
    ResidualReport rep{"monogenic", n, m, h, residual_at(h), 0.0, false};
    rep.order = detail::order_estimate(residual_at(2e-3), residual_at(4e-3), residual_at(8e-3));
    rep.pass = rep.residual < tol;
    return rep;
}

/// Residuals of the four conjugate-harmonic ladder equations
///   d_{x0} A_n = A_{n-1},  -duls A_n = B_{n-1},
///   d_{x0} B_n = B_{n-1},  -duls B_n = A_{n-1}.
inline ResidualReport check_chain_step(int n, int m, int samples, double h, double tol,
                                       std::uint64_t seed = 0) {
    if (n > 2) throw UnsupportedError("check_chain_step: n-1 not evaluable for n > 2");
    auto pts = sample_interior_points(m, samples, seed);
    KernelField a_field = [n, m](const HalfSpacePoint& p) { return detail::scalar_field_A(n, m, p); };
    KernelField b_field = [n, m](const HalfSpacePoint& p) { return detail::vector_field_B(n, m, p); };

    auto residual_at = [&](double step) {
        return detail::max_over_points(pts, [&](const HalfSpacePoint& p) {
            Multivector a_prev = detail::scalar_field_A(n - 1, m, p);
            Multivector b_prev = detail::vector_field_B(n - 1, m, p);
            double worst = mv_norm(partial_fd(a_field, p, 0, step) - a_prev);
            worst = std::max(worst, mv_norm(-dirac_surface_fd(a_field, p, step) - b_prev));
            worst = std::max(worst, mv_norm(partial_fd(b_field, p, 0, step) - b_prev));
            worst = std::max(worst, mv_norm(-dirac_surface_fd(b_field, p, step) - a_prev));
            return worst;
        });
    };
    ResidualReport rep{"chain_step", n, m, h, residual_at(h), 0.0, false};
    rep.order = detail::order_estimate(residual_at(2e-3), residual_at(4e-3), residual_at(8e-3));
    rep.pass = rep.residual < tol;
    return rep;
}

/// Perpendicular boundary-limit study: |kernel(x0, x) - representative(x)|
/// over decreasing x0 at fixed |x| = 1.  One row per level; each row passes
/// if the error did not grow, the last row additionally requires error < tol.
inline std::vector<ResidualReport> boundary_limit_study(int n, int m, char component,
                                                        const std::vector<double>& x0_levels,
                                                        double tol) {
    auto [a, b] = boundary_value(n, m);
    const BoundaryDistribution& target = (component == 'A') ? a : b;
    if (target.has_delta_type())
        throw UnsupportedError(std::string("boundary_limit_study: ") + component + "_" +
                               std::to_string(n) + " has a delta-type limit (not a function)");
    std::vector<double> dir(m, 0.0);
    dir[0] = 0.6;
    dir[1] = 0.8;  // fixed unit direction, |x| = 1
    RepresentativeValue rep = representative_value(target, 1.0);

    std::vector<ResidualReport> rows;
    double prev = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < x0_levels.size(); ++i) {
        const double x0 = x0_levels[i];
        HalfSpacePoint p(x0, dir);
        KernelValue kv = eval_chain(n, m, p);
        double err = 0.0;
        if (component == 'A') {
            err = std::fabs(kv.a - rep.scalar);
        } else {
            for (int j = 0; j < m; ++j) err = std::max(err, std::fabs(kv.b[j] - rep.radial * dir[j]));
        }
        ResidualReport row{std::string("boundary_limit_") + component, n, m, x0, err, 0.0, false};
        row.order = (i > 0 && err > 0 && prev > 0)
                        ? std::log(prev / err) / std::log(x0_levels[i - 1] / x0)
                        : 0.0;
        row.pass = (err <= prev) && (i + 1 < x0_levels.size() || err < tol);
        prev = err;
        rows.push_back(row);
    }
    return rows;
}

inline std::vector<ResidualReport> boundary_limit_study(int n, char component,
                                                        const GridSpec& grid, double tol) {
    return boundary_limit_study(n, grid.m, component, grid.x0_levels, tol);
}

/// Harmonicity of A_n and B_n: the FD Laplacian residual is pure O(h^2)
/// truncation.
inline ResidualReport check_harmonicity(int n, int m, int samples, double h, double tol,
                                        std::uint64_t seed = 0) {
    auto pts = sample_interior_points(m, samples, seed);
    KernelField a_field = [n, m](const HalfSpacePoint& p) { return detail::scalar_field_A(n, m, p); };
    KernelField b_field = [n, m](const HalfSpacePoint& p) { return detail::vector_field_B(n, m, p); };
    auto residual_at = [&](double step) {
        return detail::max_over_points(pts, [&](const HalfSpacePoint& p) {
            return std::max(mv_norm(laplacian_fd(a_field, p, step)),
                            mv_norm(laplacian_fd(b_field, p, step)));
        });
    };
    ResidualReport rep{"harmonicity", n, m, h, residual_at(h), 0.0, false};
    rep.order = detail::order_estimate(residual_at(4e-3), residual_at(8e-3), residual_at(1.6e-2));
    rep.pass = rep.residual < tol;
    return rep;
}

/// Exact homogeneity: kernel_n(s x) = s^{n+1-m} kernel_n(x), s in {2, 1/2}.
inline ResidualReport check_homogeneity(int n, int m, int samples, std::uint64_t seed = 0,
                                        double tol = 1e-11) {
    auto pts = sample_interior_points(m, samples, seed);
    const double degree = n + 1 - m;
    double worst = 0.0;
    for (const auto& p : pts) {
        for (double s : {2.0, 0.5}) {
            std::vector<double> xs = p.x;
            for (double& c : xs) c *= s;
            HalfSpacePoint ps(p.x0 * s, xs);
            KernelValue kv = eval_chain(n, m, p);
            KernelValue kvs = eval_chain(n, m, ps);
            const double scale = std::pow(s, degree);
            double err = std::fabs(kvs.a - scale * kv.a);
            for (int i = 0; i < m; ++i) err = std::max(err, std::fabs(kvs.b[i] - scale * kv.b[i]));
            const double mag = std::max(1.0, std::fabs(kv.a));
            worst = std::max(worst, err / mag);
        }
    }
    return {"homogeneity", n, m, 0.0, worst, 0.0, worst < tol};
}

/// Rotation symmetry at m = 3: A_n invariant, B_n equivariant.
inline ResidualReport check_rotation(int n, int samples, std::uint64_t seed = 0,
                                     double tol = 1e-11) {
    const int m = 3;
    std::mt19937_64 rng(seed + 17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto pts = sample_interior_points(m, samples, seed);
    double worst = 0.0;
    for (const auto& p : pts) {
        // random rotation via Rodrigues' formula
        double ax = u(rng), ay = u(rng), az = u(rng);
        const double an = std::sqrt(ax * ax + ay * ay + az * az) + 1e-12;
        ax /= an, ay /= an, az /= an;
        const double th = 3.0 * u(rng), c = std::cos(th), s = std::sin(th);
        auto rotate = [&](const std::vector<double>& v) {
            const double dot = ax * v[0] + ay * v[1] + az * v[2];
            std::vector<double> cx = {ay * v[2] - az * v[1], az * v[0] - ax * v[2],
                                      ax * v[1] - ay * v[0]};
            std::vector<double> r(3);
            const double axis[3] = {ax, ay, az};
            for (int i = 0; i < 3; ++i) r[i] = v[i] * c + cx[i] * s + axis[i] * dot * (1 - c);
            return r;
        };
        HalfSpacePoint pr(p.x0, rotate(p.x));
        KernelValue kv = eval_chain(n, m, p);
        KernelValue kvr = eval_chain(n, m, pr);
        double err = std::fabs(kvr.a - kv.a);
        std::vector<double> rb = rotate(kv.b);
        for (int i = 0; i < m; ++i) err = std::max(err, std::fabs(kvr.b[i] - rb[i]));
        worst = std::max(worst, err);
    }
    return {"rotation", n, m, 0.0, worst, 0.0, worst < tol};
}

/// Quadrature check of the transport identities (m = 2)
///   a_0 * A_{-2} = A_{-1} = b_0 * B_{-2},   a_0 * B_{-2} = B_{-1} = b_0 * A_{-2},
/// convolutions in the boundary variable; the b_0-products contract in the
/// Clifford algebra (scalar part -sum_i b_i * K_i, bivector part must cancel).
inline ResidualReport check_kernel_transport(double x0 = 0.5, double extent = 9.0,
                                             int grid_n = 360, double tol = 5e-2) {
    const int m = 2;
    const double h = 2.0 * extent / grid_n;
    auto node = [&](int i) { return -extent + (i + 0.5) * h; };

    // a_0(y) = ca |y|^{-(m-1)}, b_0(y) = cb |y|^{-m} y; constants hoisted out
    // of the node loop (exact-arithmetic evaluation is costly).
    const double ca = representative_value(boundary_a(0, m), 1.0).scalar;
    const double cb = representative_value(boundary_b(0, m), 1.0).radial;
    auto a0_at = [&](double r) { return ca * std::pow(r, 1 - m); };
    auto b0_at = [&](double r) { return cb * std::pow(r, -m); };  // times y_i

    // Midpoint rule misstates 1/|y| on the four cells around the origin;
    // replace the node value by the exact cell average there
    // (avg of 1/r over an h x h corner cell = 2 ln(1+sqrt 2)/h).
    const double singular_fix = (2.0 * std::log(1.0 + std::sqrt(2.0)) - std::sqrt(2.0)) / h;

    const std::vector<std::pair<double, double>> eval_pts = {{0.0, 0.0}, {0.4, -0.2}, {-0.3, 0.5}};
    double worst = 0.0;
    for (auto [X1, X2] : eval_pts) {
        double a_conv_A = 0.0, a_conv_B1 = 0.0, a_conv_B2 = 0.0;
        double b_conv_A1 = 0.0, b_conv_A2 = 0.0, b_dot_B = 0.0, b_wedge_B = 0.0;
        for (int i = 0; i < grid_n; ++i) {
            const double y1 = node(i);
            for (int j = 0; j < grid_n; ++j) {
                const double y2 = node(j);
                const double r = std::sqrt(y1 * y1 + y2 * y2);
                double a0v = a0_at(r);
                if (std::fabs(y1) < h && std::fabs(y2) < h) a0v += ca * singular_fix;
                const double bf = b0_at(r);
                KernelValue k2 = eval_downstream(-2, m, HalfSpacePoint(x0, {X1 - y1, X2 - y2}));
                a_conv_A += a0v * k2.a;
                a_conv_B1 += a0v * k2.b[0];
                a_conv_B2 += a0v * k2.b[1];
                b_conv_A1 += bf * y1 * k2.a;
                b_conv_A2 += bf * y2 * k2.a;
                b_dot_B -= bf * (y1 * k2.b[0] + y2 * k2.b[1]);
                b_wedge_B += bf * (y1 * k2.b[1] - y2 * k2.b[0]);
            }
        }
        const double w = h * h;
        KernelValue k1 = eval_downstream(-1, m, HalfSpacePoint(x0, {X1, X2}));
        const double scale = std::max(std::fabs(k1.a), 1e-3);
        worst = std::max(worst, std::fabs(a_conv_A * w - k1.a) / scale);
        worst = std::max(worst, std::fabs(a_conv_B1 * w - k1.b[0]) / scale);
        worst = std::max(worst, std::fabs(a_conv_B2 * w - k1.b[1]) / scale);
        worst = std::max(worst, std::fabs(b_conv_A1 * w - k1.b[0]) / scale);
        worst = std::max(worst, std::fabs(b_conv_A2 * w - k1.b[1]) / scale);
        worst = std::max(worst, std::fabs(b_dot_B * w - k1.a) / scale);
        worst = std::max(worst, std::fabs(b_wedge_B * w) / scale);
    }
    return {"kernel_transport", -2, m, x0, worst, 0.0, worst < tol};
}

/// Pv quadrature check of the kernel-level Hilbert pairing
///   H * A_{-k} = B_{-k},  H * B_{-k} = A_{-k}  (contractions as above).
/// The symmetric cell-center lattice cancels the odd part of the Pv
/// singularity of H(y) = -(2/sigma_3) y/|y|^3 around y = 0.
inline ResidualReport check_kernel_hilbert_pair(int k = 2, double x0 = 0.5, double extent = 9.0,
                                                int grid_n = 360, double tol = 5e-2) {
    const int m = 2;
    const double h = 2.0 * extent / grid_n;
    auto node = [&](int i) { return -extent + (i + 0.5) * h; };
    const double ch = representative_value(hilbert_kernel(m), 1.0).radial;  // times y_i / |y|^{m+2}

    const std::vector<std::pair<double, double>> eval_pts = {{0.0, 0.0}, {0.35, -0.15}};
    double worst = 0.0;
    for (auto [X1, X2] : eval_pts) {
        double h_conv_A1 = 0.0, h_conv_A2 = 0.0, h_dot_B = 0.0, h_wedge_B = 0.0;
        for (int i = 0; i < grid_n; ++i) {
            const double y1 = node(i);
            for (int j = 0; j < grid_n; ++j) {
                const double y2 = node(j);
                const double r2 = y1 * y1 + y2 * y2;
                const double hf = ch / (r2 * std::sqrt(r2));
                KernelValue kv = eval_downstream(-k, m, HalfSpacePoint(x0, {X1 - y1, X2 - y2}));
                h_conv_A1 += hf * y1 * kv.a;
                h_conv_A2 += hf * y2 * kv.a;
                h_dot_B -= hf * (y1 * kv.b[0] + y2 * kv.b[1]);
                h_wedge_B += hf * (y1 * kv.b[1] - y2 * kv.b[0]);
            }
        }
        const double w = h * h;
        KernelValue want = eval_downstream(-k, m, HalfSpacePoint(x0, {X1, X2}));
        const double scale = std::max(std::fabs(want.a), 1e-3);
        worst = std::max(worst, std::fabs(h_conv_A1 * w - want.b[0]) / scale);
        worst = std::max(worst, std::fabs(h_conv_A2 * w - want.b[1]) / scale);
        worst = std::max(worst, std::fabs(h_dot_B * w - want.a) / scale);
        worst = std::max(worst, std::fabs(h_wedge_B * w) / scale);
    }
    return {"kernel_hilbert_pair", -k, m, x0, worst, 0.0, worst < tol};
}

// ---------------------------------------------------------------------------
// Poisson / Hilbert quadrature demo on R^2 (m = 2)
// ---------------------------------------------------------------------------

struct PoissonDemoConfig {
    GridSpec grid{2, 960, 6.0, {0.2, 0.1, 0.05}};
    double bump_radius = 4.0;
    double tol = 5e-2;
    double harmonic_h = 5e-3;
    double harmonic_tol = 1e-4;
    double harmonic_x0 = 0.3;
};

namespace detail {

struct PlaneGrid {
    double h;
    double origin;
    int n;
    std::vector<double> f;  // row-major f(y1_i, y2_j)

    double node(int i) const { return origin + (i + 0.5) * h; }
    int nearest(double x) const {
        int i = static_cast<int>(std::floor((x - origin) / h));
        return std::clamp(i, 0, n - 1);
    }
};

inline double bump(double r2, double radius) {
    const double s2 = r2 / (radius * radius);
    if (s2 >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - s2));
}

inline PlaneGrid make_bump_grid(const PoissonDemoConfig& cfg) {
    if (cfg.bump_radius + 1.0 > cfg.grid.extent)
        throw std::domain_error("poisson demo: bump support clipped by the grid");
    PlaneGrid g;
    g.h = 2.0 * cfg.grid.extent / cfg.grid.resolution;
    g.origin = -cfg.grid.extent;
    g.n = cfg.grid.resolution;
    g.f.assign(static_cast<size_t>(g.n) * g.n, 0.0);
    for (int i = 0; i < g.n; ++i) {
        const double y1 = g.node(i);
        for (int j = 0; j < g.n; ++j) {
            const double y2 = g.node(j);
            g.f[static_cast<size_t>(i) * g.n + j] = bump(y1 * y1 + y2 * y2, cfg.bump_radius);
        }
    }
    return g;
}

/// P * f at (x0, X) by midpoint quadrature; P(x0,w) = (1/2pi) x0 (x0^2+|w|^2)^{-3/2}.
inline double poisson_sum(const PlaneGrid& g, double x0, double X1, double X2) {
    const double w = g.h * g.h / (2.0 * M_PI);
    double acc = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double d1 = X1 - g.node(i);
        for (int j = 0; j < g.n; ++j) {
            const double fv = g.f[static_cast<size_t>(i) * g.n + j];
            if (fv == 0.0) continue;
            const double d2 = X2 - g.node(j);
            const double t = x0 * x0 + d1 * d1 + d2 * d2;
            acc += fv * x0 / (t * std::sqrt(t));
        }
    }
    return acc * w;
}

/// Q * f at (x0, X); Q(x0,w) = -(1/2pi) w (x0^2+|w|^2)^{-3/2} (2-vector).
inline std::pair<double, double> conjugate_sum(const PlaneGrid& g, double x0, double X1,
                                               double X2) {
    const double w = g.h * g.h / (2.0 * M_PI);
    double a1 = 0.0, a2 = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double d1 = X1 - g.node(i);
        for (int j = 0; j < g.n; ++j) {
            const double fv = g.f[static_cast<size_t>(i) * g.n + j];
            if (fv == 0.0) continue;
            const double d2 = X2 - g.node(j);
            const double t = x0 * x0 + d1 * d1 + d2 * d2;
            const double k = fv / (t * std::sqrt(t));
            a1 -= d1 * k;
            a2 -= d2 * k;
        }
    }
    return {a1 * w, a2 * w};
}

/// Pv Hilbert quadrature with symmetric-pair cancellation: the eval point is
/// a grid node, the singular node is skipped, and opposite lattice offsets
/// cancel the even part of the singularity.
inline std::pair<double, double> hilbert_pv_sum(const PlaneGrid& g, int ic, int jc) {
    const double w = g.h * g.h / (2.0 * M_PI);
    double a1 = 0.0, a2 = 0.0;
    const double X1 = g.node(ic), X2 = g.node(jc);
    for (int i = 0; i < g.n; ++i) {
        const double d1 = X1 - g.node(i);
        for (int j = 0; j < g.n; ++j) {
            if (i == ic && j == jc) continue;
            const double fv = g.f[static_cast<size_t>(i) * g.n + j];
            if (fv == 0.0) continue;
            const double d2 = X2 - g.node(j);
            const double t = d1 * d1 + d2 * d2;
            const double k = fv / (t * std::sqrt(t));
            a1 -= d1 * k;
            a2 -= d2 * k;
        }
    }
    return {a1 * w, a2 * w};
}

}  // namespace detail

/// Quadrature checks of the Poisson transform on R^2: (a) P*f is harmonic,
/// (b) P*f -> f with x0, (c) Q*f at small x0 matches the Pv Hilbert sum.
inline std::vector<ResidualReport> poisson_quadrature_check(const PoissonDemoConfig& cfg = {}) {
    detail::PlaneGrid g = detail::make_bump_grid(cfg);
    std::vector<ResidualReport> rows;

    // Evaluation lattice: grid nodes nearest to {-1,-0.5,0,0.5,1}^2.
    std::vector<std::pair<int, int>> eval_nodes;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            eval_nodes.push_back({g.nearest(0.5 * a), g.nearest(0.5 * b)});

    double prev = std::numeric_limits<double>::infinity();
    for (size_t lvl = 0; lvl < cfg.grid.x0_levels.size(); ++lvl) {
        const double x0 = cfg.grid.x0_levels[lvl];
        double worst = 0.0;
        for (auto [i, j] : eval_nodes) {
            const double got = detail::poisson_sum(g, x0, g.node(i), g.node(j));
            const double want = g.f[static_cast<size_t>(i) * g.n + j];
            worst = std::max(worst, std::fabs(got - want));
        }
        ResidualReport row{"poisson_identity", -1, 2, x0, worst, 0.0, false};
        row.pass = (worst <= prev) && (lvl + 1 < cfg.grid.x0_levels.size() || worst < cfg.tol);
        prev = worst;
        rows.push_back(row);
    }

    // Harmonicity of the discrete Poisson extension (an exact superposition
    // of harmonic kernels, so only FD truncation shows up).
    {
        const double H = cfg.harmonic_h;
        double worst = 0.0;
        for (auto [X1, X2] : std::vector<std::pair<double, double>>{{0.0, 0.0}, {0.45, -0.3}}) {
            auto u = [&](double x0, double a, double b) { return detail::poisson_sum(g, x0, a, b); };
            const double x0 = cfg.harmonic_x0;
            double lap = u(x0 + H, X1, X2) + u(x0 - H, X1, X2) + u(x0, X1 + H, X2) +
                         u(x0, X1 - H, X2) + u(x0, X1, X2 + H) + u(x0, X1, X2 - H) -
                         6.0 * u(x0, X1, X2);
            lap /= H * H;
            worst = std::max(worst, std::fabs(lap));
        }
        rows.push_back({"poisson_harmonic", -1, 2, cfg.harmonic_x0, worst, 0.0,
                        worst < cfg.harmonic_tol});
    }

    // Q*f against the principal-value Hilbert quadrature at the finest level.
    {
        const double x0 = cfg.grid.x0_levels.back();
        double worst = 0.0;
        for (auto [i, j] : eval_nodes) {
            auto [q1, q2] = detail::conjugate_sum(g, x0, g.node(i), g.node(j));
            auto [h1, h2] = detail::hilbert_pv_sum(g, i, j);
            worst = std::max({worst, std::fabs(q1 - h1), std::fabs(q2 - h2)});
        }
        rows.push_back({"poisson_hilbert", -1, 2, x0, worst, 0.0, worst < cfg.tol});
    }
    return rows;
}

}  // namespace hspot
