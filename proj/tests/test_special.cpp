#include <cmath>

#include <doctest.h>

#include "freqgap/special.hpp"

using namespace freqgap;

TEST_CASE("sinpi is exactly zero at integers") {
    for (int k = -6; k <= 6; ++k) CHECK(sinpi((double)k) == 0.0);
    CHECK(sinpi(1e8) == 0.0);
}

TEST_CASE("sinpi matches sin(pi x) away from integers") {
    CHECK(sinpi(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(sinpi(1.5) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(sinpi(0.25) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(sinpi(-0.25) == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-15));
    CHECK(sinpi(2.75) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("inv_gamma is exactly zero at the poles") {
    for (int k = 0; k >= -8; --k) CHECK(inv_gamma((double)k) == 0.0);
}

TEST_CASE("inv_gamma reproduces classical values") {
    const double SQRT_PI = 1.7724538509055160273;
    CHECK(inv_gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(inv_gamma(2.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(inv_gamma(3.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(inv_gamma(4.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(inv_gamma(0.5) == doctest::Approx(1.0 / SQRT_PI).epsilon(1e-14));
    // Gamma(-1/2) = -2 sqrt(pi), Gamma(-3/2) = 4 sqrt(pi)/3
    CHECK(inv_gamma(-0.5) == doctest::Approx(-1.0 / (2.0 * SQRT_PI)).epsilon(1e-14));
    CHECK(inv_gamma(-1.5) == doctest::Approx(3.0 / (4.0 * SQRT_PI)).epsilon(1e-14));
}

TEST_CASE("gauss-legendre nodes are symmetric with weights summing to 2") {
    for (int n : {5, 20, 30}) {
        const QuadRule& r = gauss_legendre(n);
        REQUIRE(r.x.size() == (size_t)n);
        REQUIRE(r.w.size() == (size_t)n);
        double wsum = 0;
        for (int i = 0; i < n; ++i) {
            wsum += r.w[i];
            CHECK(r.w[i] > 0.0);
            if (i) CHECK(r.x[i] > r.x[i - 1]);
            CHECK(r.x[i] == doctest::Approx(-r.x[n - 1 - i]).epsilon(1e-15));
        }
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("n-point gauss-legendre integrates monomials of degree < 2n exactly") {
    const QuadRule& r = gauss_legendre(5);
    for (int deg = 0; deg <= 9; ++deg) {
        double s = 0;
        for (size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * std::pow(r.x[i], deg);
        const double exact = deg % 2 ? 0.0 : 2.0 / (deg + 1);
        CHECK(std::fabs(s - exact) < 1e-14);
    }
    // degree 2n fails, so the order claim is sharp
    const QuadRule& r2 = gauss_legendre(2);
    double s = 0;
    for (size_t i = 0; i < r2.x.size(); ++i) s += r2.w[i] * std::pow(r2.x[i], 4);
    CHECK(std::fabs(s - 0.4) > 1e-3);
}
