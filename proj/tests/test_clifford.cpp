#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>

#include "hspot/clifford.hpp"
#include "hspot/finite_diff.hpp"

using namespace hspot;

namespace {

MultivectorQ random_mv(const CliffordContext& ctx, std::mt19937_64& rng, int terms = 6) {
    std::uniform_int_distribution<std::uint32_t> mask_dist(0, (1u << (ctx.m + 1)) - 1);
    std::uniform_int_distribution<int> num(-9, 9);
    MultivectorQ v(ctx);
    for (int i = 0; i < terms; ++i) {
        Rational c(num(rng), 1 + std::abs(num(rng)) % 5);
        const std::uint32_t mask = mask_dist(rng);
        v.set(mask, v.coefficient(mask) + c);
    }
    return v;
}

}  // namespace

TEST_CASE("generator relations e_a e_b + e_b e_a = -2 delta_ab, m <= 6") {
    for (int m = 2; m <= 6; ++m) {
        CliffordContext ctx(m);
        for (int a = 0; a <= m; ++a) {
            for (int b = 0; b <= m; ++b) {
                auto ea = MultivectorQ::basis(ctx, a), eb = MultivectorQ::basis(ctx, b);
                MultivectorQ anti = ea * eb + eb * ea;
                MultivectorQ expected =
                    MultivectorQ::scalar(ctx, (a == b) ? Rational(-2) : Rational(0));
                CHECK(anti == expected);
            }
        }
    }
}

TEST_CASE("anticommutation and unit element") {
    CliffordContext ctx(3);
    auto e0 = MultivectorQ::basis(ctx, 0), e1 = MultivectorQ::basis(ctx, 1),
         e2 = MultivectorQ::basis(ctx, 2);
    CHECK((e0 * e0) == MultivectorQ::scalar(ctx, Rational(-1)));
    MultivectorQ e12(ctx);
    e12.set(0b110, Rational(1));
    CHECK((e1 * e2) == e12);
    CHECK((e2 * e1) == -e12);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        MultivectorQ a = random_mv(ctx, rng);
        CHECK((MultivectorQ::unit(ctx) * a) == a);
        CHECK((a * MultivectorQ::unit(ctx)) == a);
    }
}

TEST_CASE("geometric product is associative") {
    CliffordContext ctx(4);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 25; ++i) {
        MultivectorQ a = random_mv(ctx, rng), b = random_mv(ctx, rng), c = random_mv(ctx, rng);
        CHECK(((a * b) * c) == (a * (b * c)));
    }
}

TEST_CASE("context mismatch raises") {
    CliffordContext c3(3), c4(4);
    auto a = MultivectorQ::unit(c3), b = MultivectorQ::unit(c4);
    CHECK_THROWS_AS(a * b, DimensionError);
    CHECK_THROWS_AS(CliffordContext(1), DimensionError);
    MultivectorQ v(c3);
    CHECK_THROWS_AS(v.set(1u << 4, Rational(1)), DimensionError);  // blade beyond e_m
    CHECK_THROWS_AS(MultivectorQ::basis(c3, 4), DimensionError);
}

TEST_CASE("paravector split examples") {
    CliffordContext ctx(3);
    // f = 3 + e0bar e1  ->  (3, e1)
    MultivectorQ f = MultivectorQ::scalar(ctx, Rational(3)) +
                     MultivectorQ::e0bar(ctx) * MultivectorQ::basis(ctx, 1);
    auto [f1, f2] = paravector_split(f);
    CHECK(f1 == MultivectorQ::scalar(ctx, Rational(3)));
    CHECK(f2 == MultivectorQ::basis(ctx, 1));

    // f = e0  ->  (0, -1)
    auto [g1, g2] = paravector_split(MultivectorQ::basis(ctx, 0));
    CHECK(g1.is_zero());
    CHECK(g2 == MultivectorQ::scalar(ctx, Rational(-1)));

    // f = e0 e1  ->  (0, -e1)
    auto [h1, h2] =
        paravector_split(MultivectorQ::basis(ctx, 0) * MultivectorQ::basis(ctx, 1));
    CHECK(h1.is_zero());
    CHECK(h2 == -MultivectorQ::basis(ctx, 1));
}

TEST_CASE("paravector split is a bijection") {
    CliffordContext ctx(4);
    std::mt19937_64 rng(13);
    for (int i = 0; i < 40; ++i) {
        MultivectorQ f = random_mv(ctx, rng, 10);
        auto [f1, f2] = paravector_split(f);
        for (const auto& [mask, c] : f1.coefficients()) CHECK((mask & 1u) == 0);
        for (const auto& [mask, c] : f2.coefficients()) CHECK((mask & 1u) == 0);
        CHECK(paravector_recompose(f1, f2) == f);
    }
}

TEST_CASE("dirac_fd of a constant field vanishes") {
    CliffordContext ctx(3);
    Multivector k = Multivector::scalar(ctx, 2.5) + Multivector::basis(ctx, 2) * 0.75;
    KernelField f = [&](const HalfSpacePoint&) { return k; };
    HalfSpacePoint p(1.0, {0.3, -0.2, 0.9});
    CHECK(mv_norm(dirac_fd(f, p, 1e-4)) < 1e-11);
}

TEST_CASE("dirac_fd of the vector variable gives -(m+1)") {
    for (int m : {2, 3, 5}) {
        CliffordContext ctx(m);
        KernelField f = [&, m](const HalfSpacePoint& p) {
            std::vector<double> comps(m + 1);
            comps[0] = p.x0;
            for (int i = 0; i < m; ++i) comps[i + 1] = p.x[i];
            return Multivector::vector(ctx, comps);
        };
        HalfSpacePoint p(0.8, std::vector<double>(m, 0.4));
        Multivector d = dirac_fd(f, p, 1e-5);
        Multivector expected = Multivector::scalar(ctx, -(m + 1.0));
        CHECK(mv_norm(d - expected) < 1e-9);
    }
}

TEST_CASE("dirac applied twice approximates minus the Laplacian") {
    CliffordContext ctx(2);
    KernelField f = [&](const HalfSpacePoint& p) {
        Multivector v = Multivector::scalar(ctx, std::cos(0.8 * p.x0) * std::exp(-p.x[0]) *
                                                     std::sin(0.6 * p.x[1]));
        v.set(0b110, std::exp(-0.3 * p.norm2()));
        return v;
    };
    HalfSpacePoint p(0.8, {0.25, -0.4});
    auto residual_at = [&](double h) {
        KernelField df = [&](const HalfSpacePoint& q) { return dirac_fd(f, q, h); };
        return mv_norm(dirac_fd(df, p, h) + laplacian_fd(f, p, h));
    };
    const double r1 = residual_at(2e-3), r2 = residual_at(4e-3), r4 = residual_at(8e-3);
    CHECK(r1 < 1e-4);
    CHECK(0.5 * (std::log2(r2 / r1) + std::log2(r4 / r2)) == Catch::Approx(2.0).margin(0.3));
}

TEST_CASE("D equals the composition (1/2) e0bar dirac") {
    CliffordContext ctx(3);
    KernelField f = [&](const HalfSpacePoint& p) {
        Multivector v = Multivector::scalar(ctx, std::sin(p.x0 + 0.5 * p.x[1]));
        v.set(0b0101, std::exp(-p.xvec_norm2()));
        return v;
    };
    HalfSpacePoint p(0.7, {0.2, -0.4, 0.1});
    Multivector direct = cauchy_riemann_fd(f, p, 1e-4);
    Multivector composed = Multivector::e0bar(ctx) * dirac_fd(f, p, 1e-4) * 0.5;
    CHECK(mv_norm(direct - composed) < 1e-12);
}

TEST_CASE("non-finite kernel values in a stencil raise an evaluation error") {
    CliffordContext ctx(3);
    KernelField f = [&](const HalfSpacePoint& p) {
        const double v = p.x[0] > 0.5 ? std::numeric_limits<double>::quiet_NaN() : 1.0;
        return Multivector::scalar(ctx, v);
    };
    HalfSpacePoint p(1.0, {0.4999, 0.0, 0.0});
    CHECK_THROWS_AS(dirac_fd(f, p, 1e-3), EvaluationError);
}

TEST_CASE("D Dbar = Dbar D = (1/4) Laplacian on a smooth field") {
    CliffordContext ctx(2);
    KernelField f = [&](const HalfSpacePoint& p) {
        const double g = std::exp(-0.5 * (p.x0 * p.x0 + p.xvec_norm2())) *
                         std::sin(0.7 * p.x[0] + 0.3 * p.x[1] + 0.4 * p.x0);
        Multivector v = Multivector::scalar(ctx, g);
        v.set(0b011, 0.5 * g);  // throw in a bivector component
        return v;
    };
    HalfSpacePoint p(0.9, {0.35, -0.55});

    auto residual_at = [&](double h) {
        KernelField df = [&](const HalfSpacePoint& q) { return cauchy_riemann_fd(f, q, h); };
        KernelField dbarf = [&](const HalfSpacePoint& q) { return cauchy_riemann_bar_fd(f, q, h); };
        Multivector ddbar = cauchy_riemann_fd(dbarf, p, h);
        Multivector dbard = cauchy_riemann_bar_fd(df, p, h);
        Multivector quarter_lap = laplacian_fd(f, p, h) * 0.25;
        return std::max(mv_norm(ddbar - quarter_lap), mv_norm(dbard - quarter_lap));
    };

    const double r1 = residual_at(2e-3), r2 = residual_at(4e-3), r3 = residual_at(8e-3);
    CHECK(r1 < 5e-5);
    const double order = 0.5 * (std::log2(r2 / r1) + std::log2(r3 / r2));
    CHECK(order == Catch::Approx(2.0).margin(0.3));
}
