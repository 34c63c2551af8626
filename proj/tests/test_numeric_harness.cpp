#include <catch2/catch_amalgamated.hpp>

#include "hspot/numeric_harness.hpp"

using namespace hspot;

TEST_CASE("sampled points stay interior and unit scale") {
    auto pts = sample_interior_points(3, 100, 0);
    for (const auto& p : pts) {
        CHECK(p.x0 >= 0.5);
        CHECK(p.norm() >= 1.0);
        CHECK(p.norm() <= 2.1);
        CHECK(p.xvec_norm() >= 1.0);
    }
    // deterministic under the seed
    auto again = sample_interior_points(3, 100, 0);
    CHECK(again[7].x0 == pts[7].x0);
    auto other = sample_interior_points(3, 100, 1);
    CHECK(other[7].x0 != pts[7].x0);
}

TEST_CASE("Cauchy kernel monogenicity at the reference point") {
    // |D C_{-1}| < 1e-6 at p = (1, (1,0,0)), m = 3, h = 1e-4.
    KernelField f = chain_field(-1, 3);
    HalfSpacePoint p(1.0, {1.0, 0.0, 0.0});
    CHECK(mv_norm(cauchy_riemann_fd(f, p, 1e-4)) < 1e-6);
}

TEST_CASE("monogenicity residuals across the chain") {
    for (int n = -4; n <= 1; ++n) {
        ResidualReport rep = check_monogenic(n, 3, 60, 1e-4, 1e-6);
        INFO("n=" << n << " residual=" << rep.residual << " order=" << rep.order);
        CHECK(rep.pass);
        CHECK(rep.order == Catch::Approx(2.0).margin(0.3));
    }
    for (int m : {4, 5}) {
        ResidualReport rep = check_monogenic(2, m, 60, 1e-4, 1e-6);
        INFO("m=" << m << " residual=" << rep.residual);
        CHECK(rep.pass);
        CHECK(rep.order == Catch::Approx(2.0).margin(0.3));
    }
    // the margin is not a seed artifact
    for (std::uint64_t seed : {1, 2}) {
        CHECK(check_monogenic(-4, 3, 60, 1e-4, 1e-6, seed).pass);
    }
}

TEST_CASE("chain-step residuals for every adjacent evaluable pair") {
    for (int n = -4; n <= 1; ++n) {
        ResidualReport rep = check_chain_step(n, 3, 40, 1e-4, 1e-6);
        INFO("n=" << n << " residual=" << rep.residual << " order=" << rep.order);
        CHECK(rep.pass);
        CHECK(rep.order == Catch::Approx(2.0).margin(0.35));
    }
    ResidualReport rep2 = check_chain_step(2, 4, 40, 1e-4, 1e-6);
    CHECK(rep2.pass);
    CHECK_THROWS_AS(check_chain_step(3, 5, 10, 1e-4, 1e-6), UnsupportedError);
}

TEST_CASE("monogenicity holds through the near-axis representations") {
    // Points with |x|/x0 well below the switch ratio: the series forms and
    // their Dirac derivatives carry the residual here.
    auto axis_points = [](int m, int count) {
        std::vector<HalfSpacePoint> pts;
        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> ux0(0.9, 1.3), ur(0.08, 0.3), uc(-1.0, 1.0);
        while (static_cast<int>(pts.size()) < count) {
            std::vector<double> dir(m);
            double n2 = 0;
            for (double& d : dir) {
                d = uc(rng);
                n2 += d * d;
            }
            if (n2 < 1e-3) continue;
            const double r = ur(rng) / std::sqrt(n2);
            for (double& d : dir) d *= r;
            pts.emplace_back(ux0(rng), dir);
        }
        return pts;
    };
    for (auto [n, m] : std::vector<std::pair<int, int>>{{0, 3}, {1, 3}, {1, 4}, {2, 4}}) {
        KernelField f = chain_field(n, m);
        double worst = 0.0;
        for (const auto& p : axis_points(m, 30))
            worst = std::max(worst, mv_norm(cauchy_riemann_fd(f, p, 1e-4)));
        INFO("n=" << n << " m=" << m << " worst=" << worst);
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("boundary limit studies converge monotonically") {
    const std::vector<double> levels = {0.1, 0.05, 0.01, 0.005};
    auto run = [&](int n, int m, char comp) {
        auto rows = boundary_limit_study(n, m, comp, levels, 1e-3);
        REQUIRE(rows.size() == levels.size());
        for (const auto& r : rows) {
            INFO("n=" << n << " comp=" << comp << " x0=" << r.h_or_x0 << " res=" << r.residual);
            CHECK(r.pass);
        }
    };
    run(-2, 3, 'A');
    run(0, 3, 'A');
    run(0, 3, 'B');
    run(1, 3, 'A');
    run(1, 3, 'B');
    run(1, 4, 'A');  // A_1 -> a_1 = (1/sigma_m)(1/(m-2)) |x|^{-(m-2)}
    run(2, 4, 'A');
    run(2, 4, 'B');
    // delta-type limits are not pointwise functions
    CHECK_THROWS_AS(boundary_limit_study(-1, 3, 'A', levels, 1e-3), UnsupportedError);
    CHECK_THROWS_AS(boundary_limit_study(-2, 3, 'B', levels, 1e-3), UnsupportedError);
    // H = b_{-1} is regular away from the origin, so the B-side works at n = -1
    run(-1, 3, 'B');
    // deeper in the chain the surviving regular components still converge
    run(-3, 3, 'B');  // B_{-3} -> duls^2 H representative
    run(-4, 3, 'A');  // A_{-4} -> Fp r^{-m-3} representative
    // GridSpec-driven variant
    auto rows = boundary_limit_study(0, 'B', GridSpec(3, 16, 6.0, levels), 1e-3);
    for (const auto& r : rows) CHECK(r.pass);
}

TEST_CASE("homogeneity degree n+1-m") {
    for (int n = -4; n <= 1; ++n) {
        ResidualReport rep = check_homogeneity(n, 3, 25);
        INFO("n=" << n << " residual=" << rep.residual);
        CHECK(rep.pass);
    }
    CHECK(check_homogeneity(2, 4, 25).pass);
}

TEST_CASE("rotation invariance and equivariance at m=3") {
    for (int n : {-3, -1, 0, 1}) {
        ResidualReport rep = check_rotation(n, 25);
        INFO("n=" << n << " residual=" << rep.residual);
        CHECK(rep.pass);
    }
}

TEST_CASE("grid spec invariants") {
    CHECK_THROWS(GridSpec(4, 32));
    CHECK_THROWS(GridSpec(2, 8));
    CHECK_THROWS(GridSpec(2, 64, -1.0));
    CHECK_NOTHROW(GridSpec(2, 16));
}

TEST_CASE("harmonicity of chain kernels by finite differences") {
    for (int n : {-4, -1, 0, 1}) {
        ResidualReport rep = check_harmonicity(n, 3, 25, 1e-3, 1e-3);
        INFO("n=" << n << " residual=" << rep.residual << " order=" << rep.order);
        CHECK(rep.pass);
        CHECK(rep.order == Catch::Approx(2.0).margin(0.35));
    }
    CHECK(check_harmonicity(2, 4, 25, 1e-3, 1e-3).pass);
}

TEST_CASE("point loops give identical results under HSPOT_THREADS") {
    ResidualReport serial = check_monogenic(-2, 3, 64, 1e-4, 1e-6);
    setenv("HSPOT_THREADS", "4", 1);
    ResidualReport threaded = check_monogenic(-2, 3, 64, 1e-4, 1e-6);
    unsetenv("HSPOT_THREADS");
    CHECK(serial.residual == threaded.residual);
}

TEST_CASE("boundary values transport kernels one chain step (quadrature)") {
    ResidualReport rep = check_kernel_transport();
    INFO("relative residual " << rep.residual);
    CHECK(rep.pass);
}

TEST_CASE("kernel-level Hilbert pairing by Pv quadrature") {
    for (int k : {1, 2}) {
        ResidualReport rep = check_kernel_hilbert_pair(k);
        INFO("k=" << k << " relative residual " << rep.residual);
        CHECK(rep.pass);
    }
}

TEST_CASE("Dbar C_n = C_{n-1}: each kernel is a monogenic potential of the next") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{-2, 3}, {0, 3}, {1, 3}, {2, 4}}) {
        KernelField f = chain_field(n, m);
        double worst = 0.0;
        for (const auto& p : sample_interior_points(m, 30, 3)) {
            Multivector got = cauchy_riemann_bar_fd(f, p, 1e-4);
            worst = std::max(worst, mv_norm(got - eval_C(n - 1, m, p)));
        }
        INFO("n=" << n << " m=" << m << " worst=" << worst);
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("poisson demo: zero input gives zero transforms") {
    PoissonDemoConfig cfg;
    cfg.grid = GridSpec(2, 64, 6.0, {0.2, 0.1, 0.05});
    cfg.bump_radius = 1e-9;
    auto rows = poisson_quadrature_check(cfg);
    for (const auto& r : rows) {
        CHECK(r.residual == 0.0);
        CHECK(r.pass);
    }
}

TEST_CASE("poisson demo: smooth bump reproduction and Hilbert consistency") {
    auto rows = poisson_quadrature_check(PoissonDemoConfig{});
    REQUIRE(rows.size() == 5);
    for (const auto& r : rows) {
        INFO(r.test_id << " x0=" << r.h_or_x0 << " residual=" << r.residual);
        CHECK(r.pass);
    }
    CHECK(rows[2].residual < 5e-2);  // P*f vs f at x0 = 0.05
}

TEST_CASE("csv rendering") {
    ResidualReport r{"monogenic", -1, 3, 1e-4, 2.5e-8, 2.01, true};
    CHECK(residual_csv_header() == "test_id,n,m,h_or_x0,residual,order,pass");
    CHECK(residual_csv_row(r) == "monogenic,-1,3,0.0001,2.5e-08,2.01,1");
}
