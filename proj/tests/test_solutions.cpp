#include <cmath>
#include <random>

#include <doctest.h>

#include "freqgap/oscillation.hpp"
#include "freqgap/solutions.hpp"

using namespace freqgap;

TEST_CASE("catalog collects families sorted by homogeneity degree") {
    const auto c2 = catalog(2.0, 2);
    REQUIRE(c2.size() == 3);
    CHECK(c2[0].family == Family::OddReflected);
    CHECK(c2[0].lambda == 1.0);
    CHECK(c2[1].family == Family::ThreeHalves);
    CHECK(c2[1].lambda == 1.5);
    CHECK(c2[2].family == Family::EvenPoly);
    CHECK(c2[2].lambda == 2.0);

    const auto c4 = catalog(4.0, 3);
    REQUIRE(c4.size() == 6);
    const double want[] = {1.0, 1.5, 2.0, 3.0, 3.5, 4.0};
    for (size_t i = 0; i < c4.size(); ++i) CHECK(c4[i].lambda == want[i]);

    CHECK(catalog(0.5, 7).empty());
}

TEST_CASE("polynomial families evaluate to their closed forms") {
    const ExplicitSolution even = make_solution(Family::EvenPoly, 1, 2); // x1^2 - xn^2
    CHECK(eval_u(even, {1.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(eval_u(even, {0.0, 1.0}) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(std::fabs(eval_u(even, {1.0, 1.0})) < 1e-14);

    const ExplicitSolution odd = make_solution(Family::OddReflected, 0, 2); // -|xn|
    CHECK(eval_u(odd, {0.3, 0.7}) == doctest::Approx(-0.7).epsilon(1e-14));
    CHECK(eval_u(odd, {0.3, -0.7}) == doctest::Approx(-0.7).epsilon(1e-14));
    CHECK(eval_u(odd, {-2.0, 0.0}) == 0.0);

    const ExplicitSolution th = make_solution(Family::ThreeHalves, 0, 2); // r^1.5 cos(1.5 theta)
    CHECK(eval_u(th, {1.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::fabs(eval_u(th, {-1.0, 0.0})) < 1e-13); // cos(3 pi / 2)
    // at theta = pi/2: cos(3 pi/4) = -sqrt(2)/2
    CHECK(eval_u(th, {0.0, 1.0}) == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-14));
}

TEST_CASE("one-sided normal derivative per family") {
    const ExplicitSolution even = make_solution(Family::EvenPoly, 2, 3);
    CHECK(eval_un(even, thin_point({0.7, 0.2, 0.0})) == 0.0);

    const ExplicitSolution odd = make_solution(Family::OddReflected, 0, 3); // u_n = -1
    CHECK(eval_un(odd, thin_point({0.7, -0.4, 0.0})) == -1.0);
    const ExplicitSolution odd1 = make_solution(Family::OddReflected, 1, 2); // u_n = -3 x1^2
    CHECK(eval_un(odd1, thin_point({0.5, 0.0})) == doctest::Approx(-0.75).epsilon(1e-15));

    const ExplicitSolution th = make_solution(Family::ThreeHalves, 0, 2);
    CHECK(eval_un(th, thin_point({1.0, 0.0})) == 0.0);
    CHECK(eval_un(th, thin_point({0.25, 0.0})) == 0.0);
    CHECK(eval_un(th, thin_point({-1.0, 0.0})) == doctest::Approx(-1.5).epsilon(1e-14));
    CHECK(eval_un(th, thin_point({-0.25, 0.0})) == doctest::Approx(-0.75).epsilon(1e-14));
}

TEST_CASE("solutions are bitwise even in the last coordinate") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (const ExplicitSolution& sol : catalog(5.5, 3)) {
        for (int i = 0; i < 50; ++i) {
            std::vector<double> x = {u(rng), u(rng), u(rng)};
            std::vector<double> xr = x;
            xr[2] = -xr[2];
            CHECK(eval_u(sol, x) == eval_u(sol, xr));
        }
    }
}

TEST_CASE("solutions ignore coordinates outside the distinguished plane") {
    const ExplicitSolution sol = make_solution(Family::ThreeHalves, 1, 4);
    CHECK(eval_u(sol, {0.8, 0.1, -0.9, 0.3}) == eval_u(sol, {0.8, -2.0, 5.0, 0.3}));
    CHECK(eval_u(sol, {0.8, 0.0, 0.0, 0.3}) == eval_u(sol, {0.8, 7.0, 1.0, 0.3}));
}

TEST_CASE("every catalog member passes its own verification") {
    for (int n : {2, 3, 4}) {
        for (const ExplicitSolution& sol : catalog(5.5, n)) {
            const CheckReport rep = check_solution(sol, 500);
            CHECK(rep.passed);
            CHECK(rep.samples == 500);
            CHECK(rep.min_u_thin >= -1e-13);
            CHECK(rep.max_un_thin <= 1e-13);
            CHECK(rep.max_homogeneity_rel <= 1e-10);
            CHECK(rep.max_harmonic_rel <= 1e-4);
        }
    }
}

TEST_CASE("the checker rejects a doctored homogeneity degree") {
    // correct solution shape, wrong lambda: scaling defect must be caught
    const ExplicitSolution doctored{Family::EvenPoly, 1, 3, 3.0};
    try {
        check_solution(doctored, 200);
        FAIL("expected CheckFailed");
    } catch (const CheckFailed& e) {
        CHECK(e.report.first_violation.check == "homogeneity");
        CHECK(e.report.first_violation.value > e.report.first_violation.bound);
        CHECK(!e.report.passed);
    }
}

TEST_CASE("checker determinism for a fixed seed") {
    const ExplicitSolution sol = make_solution(Family::ThreeHalves, 1, 3);
    const CheckReport a = check_solution(sol, 300, 7u);
    const CheckReport b = check_solution(sol, 300, 7u);
    CHECK(a.max_homogeneity_rel == b.max_homogeneity_rel);
    CHECK(a.max_harmonic_rel == b.max_harmonic_rel);
    CHECK(a.min_u_thin == b.min_u_thin);
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(make_solution(Family::EvenPoly, 0, 3), InvalidFrequency);
    CHECK_THROWS_AS(make_solution(Family::OddReflected, -1, 3), InvalidFrequency);
    CHECK_THROWS_AS(make_solution(Family::ThreeHalves, 0, 1), InvalidDimension);
    CHECK_THROWS_AS(catalog(3.0, 1), InvalidDimension);
    CHECK_THROWS_AS(thin_point({1.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(eval_u(make_solution(Family::EvenPoly, 1, 3), {1.0, 2.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_solution(make_solution(Family::EvenPoly, 1, 3), 0),
                    std::invalid_argument);
}

// Catalog members realize their frequencies, so none may land in an excluded interval.
TEST_CASE("no catalog frequency lands in a forbidden interval") {
    for (const ExplicitSolution& sol : catalog(10.0, 3)) {
        const GapVerdict v = gap_verdict(make_query(sol.lambda, sol.dim));
        CHECK(v.status != GapStatus::Excluded);
        if (sol.family == Family::ThreeHalves) CHECK(v.status == GapStatus::NotExcluded);
        else CHECK(v.status == GapStatus::IntegerBoundary);
    }
}
