#include <cmath>
#include <random>

#include <doctest.h>

#include "freqgap/oscillation.hpp"

using namespace freqgap;

namespace {
constexpr double PI = 3.14159265358979323846;
constexpr double PI_2 = 1.57079632679489661923;
} // namespace

// In the plane p = cos(lambda phi), so the special points are explicit.
TEST_CASE("plane special points at lambda = 5/2") {
    const OscillationReport r = find_special_points(make_query(2.5, 2));
    REQUIRE(r.zeros.size() == 1);
    REQUIRE(r.crits.size() == 1);
    CHECK(r.total == 2);
    CHECK(r.zeros[0] == doctest::Approx(PI / 5).epsilon(1e-9));
    CHECK(r.crits[0] == doctest::Approx(2 * PI / 5).epsilon(1e-9));
}

TEST_CASE("plane special points at lambda = 9/2") {
    const OscillationReport r = find_special_points(make_query(4.5, 2));
    REQUIRE(r.zeros.size() == 2);
    REQUIRE(r.crits.size() == 2);
    CHECK(r.total == 4);
    CHECK(r.zeros[0] == doctest::Approx(PI / 9).epsilon(1e-9));
    CHECK(r.zeros[1] == doctest::Approx(PI / 3).epsilon(1e-9));
    CHECK(r.crits[0] == doctest::Approx(2 * PI / 9).epsilon(1e-9));
    CHECK(r.crits[1] == doctest::Approx(4 * PI / 9).epsilon(1e-9));
}

TEST_CASE("special point count equals floor(lambda) off the integers") {
    for (double lam : {0.3, 1.5, 2.5, 3.7, 4.5, 5.25, 6.8, 7.5}) {
        for (int n : {2, 3, 4, 6}) {
            const OscillationReport r = find_special_points(make_query(lam, n));
            CHECK(r.total == (int)std::floor(lam));
            CHECK(r.total == (int)(r.zeros.size() + r.crits.size()));
        }
    }
}

TEST_CASE("crossing an integer adds exactly one special point") {
    for (int m = 1; m <= 6; ++m) {
        for (int n : {2, 3}) {
            const int below = find_special_points(make_query(m - 0.01, n)).total;
            const int above = find_special_points(make_query(m + 0.01, n)).total;
            CHECK(above == below + 1);
        }
    }
}

TEST_CASE("integer frequencies keep the count within the boundary pair") {
    for (int m = 1; m <= 7; ++m) {
        for (int n : {2, 3, 5}) {
            const int t = find_special_points(make_query((double)m, n)).total;
            CHECK(t >= m - 1);
            CHECK(t <= m);
        }
    }
}

TEST_CASE("zeros and critical points strictly alternate, zero first") {
    for (double lam : {3.5, 6.8}) {
        const OscillationReport r = find_special_points(make_query(lam, 3));
        REQUIRE(!r.zeros.empty());
        for (size_t i = 0; i < r.crits.size(); ++i) {
            CHECK(r.zeros[i] < r.crits[i]);
            if (i + 1 < r.zeros.size()) CHECK(r.crits[i] < r.zeros[i + 1]);
        }
        CHECK(r.zeros.size() - r.crits.size() <= 1);
    }
}

TEST_CASE("the first zero moves toward the pole as the frequency grows") {
    double prev = PI_2;
    for (double lam = 1.5; lam < 9.0; lam += 1.0) {
        const OscillationReport r = find_special_points(make_query(lam, 3));
        REQUIRE(!r.zeros.empty());
        CHECK(r.zeros[0] < prev);
        prev = r.zeros[0];
    }
}

TEST_CASE("zeros of consecutive profiles interlace") {
    CHECK(interlacing_check(make_query(1.5, 2), make_query(2.5, 2)));
    CHECK(interlacing_check(make_query(0.5, 3), make_query(1.5, 3))); // vacuous: no zeros below
    std::mt19937_64 rng(987654321u);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const double lo = 0.6 + 6.0 * u(rng);
        const double hi = lo + 0.3 + 2.0 * u(rng);
        const int n = 2 + trial % 3;
        CHECK(interlacing_check(make_query(lo, n), make_query(hi, n)));
    }
}

TEST_CASE("cap frequencies at the half-sphere are the integer eigenvalues") {
    for (int n : {2, 3, 4, 6}) {
        CHECK(cap_frequency({PI_2, n, CapKind::Dirichlet, 1}) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(cap_frequency({PI_2, n, CapKind::Dirichlet, 2}) == doctest::Approx(3.0).epsilon(1e-9));
        CHECK(cap_frequency({PI_2, n, CapKind::Neumann, 1}) == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(cap_frequency({PI_2, n, CapKind::Neumann, 2}) == doctest::Approx(4.0).epsilon(1e-9));
    }
}

// Plane cap of aperture pi/4: cos(lambda pi/4) vanishes at lambda = 2, 6, ...
// and its derivative at lambda = 4, 8, ...
TEST_CASE("plane quarter-cap frequencies are explicit") {
    const double t = PI / 4;
    CHECK(cap_frequency({t, 2, CapKind::Dirichlet, 1}) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(cap_frequency({t, 2, CapKind::Dirichlet, 2}) == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(cap_frequency({t, 2, CapKind::Neumann, 1}) == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(cap_frequency({t, 2, CapKind::Neumann, 2}) == doctest::Approx(8.0).epsilon(1e-9));
}

TEST_CASE("cap frequency round-trips through the zero finder") {
    const double theta = 0.7;
    const double lam = cap_frequency({theta, 4, CapKind::Dirichlet, 1});
    const OscillationReport r = find_special_points(make_query(lam, 4));
    REQUIRE(!r.zeros.empty());
    CHECK(r.zeros[0] == doctest::Approx(theta).epsilon(1e-8));
}

TEST_CASE("a cap too small for the scan range reports no branch") {
    CHECK_THROWS_AS(cap_frequency({0.01, 3, CapKind::Dirichlet, 1}), BranchNotFound);
}

TEST_CASE("cap query validation") {
    CHECK_THROWS_AS(cap_frequency({-0.5, 3, CapKind::Dirichlet, 1}), std::invalid_argument);
    CHECK_THROWS_AS(cap_frequency({PI_2, 3, CapKind::Dirichlet, 0}), std::invalid_argument);
    CHECK_THROWS_AS(cap_frequency({PI_2, 1, CapKind::Dirichlet, 1}), InvalidDimension);
}

TEST_CASE("gap verdicts alternate with the parity of floor(lambda)") {
    for (int n : {2, 3, 5}) {
        for (int i = 0; i < 16; ++i) {
            const double lam = 0.25 + 0.5 * i; // 0.25, 0.75, 1.25, ...
            const GapVerdict v = gap_verdict(make_query(lam, n));
            const int fl = (int)std::floor(lam);
            if (fl % 2 == 0) {
                CHECK(v.status == GapStatus::Excluded);
                CHECK(v.k == fl / 2);
                // (Pos,Neg) or (Neg,Pos) residues: the product is negative
                CHECK(v.sign_product < 0.0);
            } else {
                CHECK(v.status == GapStatus::NotExcluded);
                CHECK(v.sign_product > 0.0);
            }
            CHECK(v.margin_ok);
        }
    }
}

TEST_CASE("integers and near-integers are never classified into an interval") {
    for (int n : {2, 4}) {
        for (double m : {1.0, 2.0, 3.0, 4.0})
            CHECK(gap_verdict(make_query(m, n)).status == GapStatus::IntegerBoundary);
        CHECK(gap_verdict(make_query(2.0000000001, n)).status == GapStatus::Indeterminate);
        CHECK(gap_verdict(make_query(3.0 - 1e-10, n)).status == GapStatus::Indeterminate);
    }
}
