#include "freqgap/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace freqgap {

namespace {

double family_lambda(Family family, int k) {
    switch (family) {
        case Family::EvenPoly: return 2.0 * k;
        case Family::OddReflected: return 2.0 * k + 1.0;
        default: return 2.0 * k + 1.5;
    }
}

const char* family_name(Family family) {
    switch (family) {
        case Family::EvenPoly: return "even-poly";
        case Family::OddReflected: return "odd-reflected";
        default: return "three-halves";
    }
}

void check_point(const ExplicitSolution& sol, const std::vector<double>& x) {
    if ((int)x.size() != sol.dim)
        throw std::invalid_argument("point has " + std::to_string(x.size()) +
                                    " coordinates, solution lives in dim " +
                                    std::to_string(sol.dim));
}

} // namespace

ExplicitSolution make_solution(Family family, int k, int dim) {
    if (dim < 2) throw InvalidDimension("solutions require dim >= 2");
    const int kmin = family == Family::EvenPoly ? 1 : 0;
    if (k < kmin)
        throw InvalidFrequency(std::string(family_name(family)) + " requires k >= " +
                               std::to_string(kmin));
    return ExplicitSolution{family, k, dim, family_lambda(family, k)};
}

std::vector<ExplicitSolution> catalog(double lambda_max, int dim) {
    if (dim < 2) throw InvalidDimension("catalog requires dim >= 2");
    if (!std::isfinite(lambda_max)) throw std::invalid_argument("lambda_max must be finite");
    std::vector<ExplicitSolution> out;
    for (int m = 1; m <= (int)std::floor(lambda_max); ++m)
        out.push_back(m % 2 == 1 ? make_solution(Family::OddReflected, (m - 1) / 2, dim)
                                 : make_solution(Family::EvenPoly, m / 2, dim));
    for (int k = 0; 2.0 * k + 1.5 <= lambda_max; ++k)
        out.push_back(make_solution(Family::ThreeHalves, k, dim));
    std::sort(out.begin(), out.end(),
              [](const ExplicitSolution& a, const ExplicitSolution& b) { return a.lambda < b.lambda; });
    return out;
}

double eval_u(const ExplicitSolution& sol, const std::vector<double>& x) {
    check_point(sol, x);
    const double a = x.front();
    const double b = std::fabs(x.back()); // even in x_n by construction
    const double r = std::hypot(a, b);
    if (r == 0.0) return 0.0; // lambda > 0, homogeneous
    if (b == 0.0) {
        // thin space: theta is exactly 0 or pi, so the angular factors collapse
        // to exact values (cos((2k+3/2) pi) = 0); evaluating sin/cos at a rounded
        // multiple of pi would instead leak ~1e-16 noise into the sign checks.
        switch (sol.family) {
            case Family::EvenPoly: return std::pow(std::fabs(a), 2 * sol.k);
            case Family::OddReflected: return 0.0;
            default: return a > 0.0 ? std::pow(a, sol.lambda) : 0.0;
        }
    }
    const double theta = std::atan2(b, a); // in (0, pi)
    switch (sol.family) {
        case Family::EvenPoly: {
            const int m = 2 * sol.k;
            return std::pow(r, m) * std::cos(m * theta);
        }
        case Family::OddReflected: {
            const int m = 2 * sol.k + 1;
            return -std::pow(r, m) * std::sin(m * theta);
        }
        default:
            return std::pow(r, sol.lambda) * std::cos(sol.lambda * theta);
    }
}

ThinPoint thin_point(std::vector<double> coords) {
    if (coords.empty() || coords.back() != 0.0)
        throw std::invalid_argument("thin point requires last coordinate exactly 0");
    return ThinPoint{std::move(coords)};
}

double eval_un(const ExplicitSolution& sol, const ThinPoint& x) {
    check_point(sol, x.coords);
    if (x.coords.back() != 0.0)
        throw std::invalid_argument("eval_un requires last coordinate exactly 0");
    const double a = x.coords.front();
    switch (sol.family) {
        case Family::EvenPoly:
            return 0.0;
        case Family::OddReflected:
            return -(2.0 * sol.k + 1.0) * std::pow(std::fabs(a), 2 * sol.k);
        default:
            return a >= 0.0 ? 0.0 : -sol.lambda * std::pow(-a, sol.lambda - 1.0);
    }
}

CheckReport check_solution(const ExplicitSolution& sol, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("check_solution: samples must be >= 1");
    const int n = sol.dim;
    const double lam = sol.lambda;
    std::mt19937_64 rng(seed ^ (std::uint64_t)(sol.k * 1315423911u) ^
                        ((std::uint64_t)sol.dim << 32) ^ (std::uint64_t)sol.family);
    std::uniform_real_distribution<double> box(-1.2, 1.2);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    CheckReport rep;
    rep.samples = samples;

    auto fail = [&](const std::string& check, const std::vector<double>& x, double value,
                    double bound) {
        rep.passed = false;
        rep.first_violation = CheckSample{check, x, value, bound};
        throw CheckFailed("check_solution: " + check + " violated (value " +
                              std::to_string(value) + ", bound " + std::to_string(bound) +
                              ") for " + family_name(sol.family) + " k=" + std::to_string(sol.k) +
                              " dim=" + std::to_string(sol.dim),
                          rep);
    };

    std::vector<double> x(n), y(n), xs(n);
    for (int it = 0; it < samples; ++it) {
        // thin-space sign conditions
        for (int i = 0; i < n; ++i) x[i] = box(rng);
        x[n - 1] = 0.0;
        const double ut = eval_u(sol, x);
        rep.min_u_thin = std::min(rep.min_u_thin, ut);
        if (ut < -1e-13) fail("thin nonnegativity of u", x, ut, -1e-13);
        const double unt = eval_un(sol, ThinPoint{x});
        rep.max_un_thin = std::max(rep.max_un_thin, unt);
        if (unt > 1e-13) fail("thin nonpositivity of u_n", x, unt, 1e-13);

        // homogeneity at a general point
        for (int i = 0; i < n; ++i) y[i] = box(rng);
        const double uy = eval_u(sol, y);
        for (const double t : {0.5, 2.0}) {
            for (int i = 0; i < n; ++i) xs[i] = t * y[i];
            const double defect = std::fabs(eval_u(sol, xs) - std::pow(t, lam) * uy);
            const double bound = 1e-10 * (1.0 + std::fabs(uy)) * std::pow(t, lam);
            rep.max_homogeneity_rel = std::max(rep.max_homogeneity_rel, defect / bound * 1e-10);
            if (defect > bound) fail("homogeneity", y, defect, bound);
        }

        // harmonicity off the thin space, |x| in [0.5, 1.5], |x_n| > 0.1
        do {
            double norm = 0.0;
            do {
                for (int i = 0; i < n; ++i) y[i] = box(rng);
                norm = 0.0;
                for (int i = 0; i < n; ++i) norm += y[i] * y[i];
                norm = std::sqrt(norm);
            } while (norm < 1e-6);
            const double scale_r = (0.5 + unit(rng)) / norm; // radius in [0.5, 1.5]
            for (int i = 0; i < n; ++i) y[i] *= scale_r;
        } while (std::fabs(y[n - 1]) <= 0.1);
        {
            const double h = 1e-3;
            double lap = 0.0;
            const double u0 = eval_u(sol, y);
            for (int i = 0; i < n; ++i) {
                xs = y;
                xs[i] = y[i] + h;
                const double up = eval_u(sol, xs);
                xs[i] = y[i] - h;
                const double um = eval_u(sol, xs);
                lap += (up - 2.0 * u0 + um) / (h * h);
            }
            double r2 = 0.0;
            for (int i = 0; i < n; ++i) r2 += y[i] * y[i];
            const double envelope = lam * (lam + n) * std::pow(std::sqrt(r2), lam - 2.0);
            const double bound = 1e-4 * envelope;
            rep.max_harmonic_rel = std::max(rep.max_harmonic_rel, std::fabs(lap) / envelope);
            if (std::fabs(lap) > bound) fail("harmonicity", y, std::fabs(lap), bound);
        }

        // evenness in x_n and independence from the passive coordinates, bitwise
        for (int i = 0; i < n; ++i) y[i] = box(rng);
        xs = y;
        xs[n - 1] = -y[n - 1];
        if (eval_u(sol, xs) != eval_u(sol, y)) fail("evenness in x_n", y, eval_u(sol, xs), 0.0);
        if (n > 2) {
            xs = y;
            for (int i = 1; i + 1 < n; ++i) xs[i] = box(rng);
            if (eval_u(sol, xs) != eval_u(sol, y))
                fail("dependence on passive coordinates", y, eval_u(sol, xs), 0.0);
        }
    }

    rep.passed = true;
    return rep;
}

} // namespace freqgap
