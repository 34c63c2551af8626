#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hspot/symbolic_constant.hpp"

using namespace hspot;

TEST_CASE("gamma_half at small arguments") {
    CHECK(gamma_half(1) == SymbolicConstant(Rational(1), 1));       // Gamma(1/2) = sqrt(pi)
    CHECK(gamma_half(6) == SymbolicConstant::rational(Rational(2)));  // Gamma(3) = 2!
    CHECK(gamma_half(5) == SymbolicConstant(Rational(3, 4), 1));    // Gamma(5/2) = 3/4 sqrt(pi)
    CHECK(gamma_half(2) == SymbolicConstant::one());
    CHECK_THROWS_AS(gamma_half(0), GammaPoleError);
    CHECK_THROWS_AS(gamma_half(-4), GammaPoleError);
}

TEST_CASE("gamma recurrence Gamma(z+1) = z Gamma(z) up to z = 25/2") {
    for (int two_z = 1; two_z <= 25; ++two_z) {
        SymbolicConstant lhs = gamma_half(two_z + 2);
        SymbolicConstant rhs = SymbolicConstant(Rational(two_z, 2), 0) * gamma_half(two_z);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("gamma_half_any covers negative half-integers") {
    // Gamma(-1/2) = -2 sqrt(pi), Gamma(-3/2) = 4/3 sqrt(pi)
    CHECK(gamma_half_any(-1) == SymbolicConstant(Rational(-2), 1));
    CHECK(gamma_half_any(-3) == SymbolicConstant(Rational(4, 3), 1));
    CHECK_THROWS_AS(gamma_half_any(-2), GammaPoleError);
    CHECK(gamma_half_any(7) == gamma_half(7));
}

TEST_CASE("gamma_ratio_limit examples") {
    CHECK(gamma_ratio_limit(3, 1) == Rational(1, 6));
    CHECK(gamma_ratio_limit(0, 0) == Rational(1));
    CHECK(gamma_ratio_limit(1, 2) == Rational(-2));
}

TEST_CASE("gamma_ratio_limit agrees with the reflection-formula oracle") {
    // Gamma(-n + eps) ~ (-1)^n / (n! eps); probe the quotient numerically.
    auto gamma_near_pole = [](int n, double eps) {
        // Shift into positive territory: Gamma(-n+eps) = Gamma(1+eps) / prod_{j=0..n} (-n+eps+j)
        double g = std::tgamma(1.0 + eps);
        for (int j = 0; j <= n; ++j) g /= (-n + eps + j);
        return g;
    };
    const double eps = 1e-7;
    for (int a = 0; a <= 5; ++a) {
        for (int b = 0; b <= 5; ++b) {
            const double numeric = gamma_near_pole(a, eps) / gamma_near_pole(b, eps);
            const double exact = to_double(gamma_ratio_limit(a, b));
            CHECK(numeric == Catch::Approx(exact).epsilon(1e-5));
        }
    }
}

TEST_CASE("gamma_falling_ratio equals the pole limit and the smooth quotient") {
    // At poles: Gamma(-2)/Gamma(-5) = (-3)(-4)(-5), matching the eps limit.
    CHECK(gamma_falling_ratio(-4, 3) == gamma_ratio_limit(2, 5));
    // Smooth: Gamma(7/2)/Gamma(1/2) = (5/2)(3/2)(1/2)
    CHECK(gamma_falling_ratio(7, 3) == Rational(15, 8));
}

TEST_CASE("sphere areas") {
    CHECK(sphere_area(2) == SymbolicConstant(Rational(2), 2));   // 2 pi
    CHECK(sphere_area(3) == SymbolicConstant(Rational(4), 2));   // 4 pi
    CHECK(sphere_area(4) == SymbolicConstant(Rational(2), 4));   // 2 pi^2
    CHECK_THROWS(sphere_area(0));
    for (int n = 1; n <= 12; ++n) {
        CHECK(sphere_area(n) * gamma_half(n) == SymbolicConstant(Rational(2), n));
    }
}

TEST_CASE("pi-power mismatch is rejected") {
    SymbolicConstant a(Rational(1), 0), b(Rational(1), 1);
    CHECK_THROWS_AS(a + b, PiPowerMismatch);
    CHECK((a + SymbolicConstant::zero()) == a);
    CHECK((SymbolicConstant::zero() + b) == b);
}

TEST_CASE("rendering") {
    CHECK(SymbolicConstant(Rational(3, 4), 1).to_string() == "3/4*pi^(1/2)");
    CHECK(SymbolicConstant(Rational(-2), 4).to_string() == "-2*pi^2");
    CHECK(SymbolicConstant(Rational(5), 0).to_string() == "5");
    CHECK(SymbolicConstant::zero().to_string() == "0");
    CHECK(SymbolicConstant(Rational(1), -2).to_string() == "1*pi^-1");
    CHECK(SymbolicConstant(Rational(1, 2), 2).to_double() == Catch::Approx(M_PI / 2));
}

TEST_CASE("decimal rendering with configurable precision") {
    SymbolicConstant half_pi(Rational(1, 2), 2);
    CHECK(half_pi.to_decimal_string(4) == "1.571");
    CHECK(half_pi.to_decimal_string(10) == "1.570796327");
    CHECK(SymbolicConstant::rational(Rational(1, 4)).to_decimal_string(3) == "0.25");
}
