#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freqgap/errors.hpp"

namespace freqgap {

// Classical homogeneous solutions, written in the plane spanned by x_1 and x_n
// with z = x_1 + i|x_n| = r e^{i theta}, theta in [0, pi]:
//   EvenPoly     (lambda = 2k,     k >= 1):  r^{2k}   cos(2k theta)
//   OddReflected (lambda = 2k+1,   k >= 0): -r^{2k+1} sin((2k+1) theta)
//   ThreeHalves  (lambda = 2k+3/2, k >= 0):  r^lambda cos(lambda theta)
enum class Family { EvenPoly, OddReflected, ThreeHalves };

struct ExplicitSolution {
    Family family;
    int k;
    int dim;       // >= 2
    double lambda; // homogeneity degree determined by family and k
};

// Validates ranges and fills lambda. Throws InvalidFrequency / InvalidDimension.
ExplicitSolution make_solution(Family family, int k, int dim);

// All catalog members with lambda <= lambda_max, sorted by lambda.
std::vector<ExplicitSolution> catalog(double lambda_max, int dim);

// Value at x (size dim). Depends only on (x_1, x_n) and is even in x_n by
// construction.
double eval_u(const ExplicitSolution& sol, const std::vector<double>& x);

struct ThinPoint {
    std::vector<double> coords; // last coordinate exactly 0
};

// Validates the last coordinate is exactly zero.
ThinPoint thin_point(std::vector<double> coords);

// One-sided normal derivative lim_{t->0+} (u(x', t) - u(x', 0)) / t:
//   EvenPoly     -> 0
//   OddReflected -> -(2k+1) |x_1|^{2k}
//   ThreeHalves  -> 0 for x_1 >= 0, -lambda |x_1|^{lambda-1} for x_1 < 0
double eval_un(const ExplicitSolution& sol, const ThinPoint& x);

struct CheckSample {
    std::string check;     // which property tripped
    std::vector<double> x; // sample point
    double value;          // observed residual / value
    double bound;          // allowed bound
};

struct CheckReport {
    bool passed = false;
    int samples = 0;
    double min_u_thin = 0;          // most negative u seen on the thin space
    double max_un_thin = 0;         // most positive u_n seen on the thin space
    double max_homogeneity_rel = 0; // worst scaled homogeneity defect
    double max_harmonic_rel = 0;    // worst scaled finite-difference Laplacian
    CheckSample first_violation;    // filled when a check fails
};

struct CheckFailed : Error {
    CheckFailed(const std::string& msg, CheckReport rep)
        : Error(msg), report(std::move(rep)) {}
    CheckReport report;
};

// Pseudo-random verification that sol behaves like a homogeneous solution:
//   - u >= 0 and u_n <= 0 on the thin space {x_n = 0} (slack 1e-13 for rounding);
//   - |u(t x) - t^lambda u(x)| <= 1e-10 (1 + |u(x)|) t^lambda for t in {1/2, 2};
//   - centered finite-difference Laplacian (h = 1e-3) at points with
//     |x| in [0.5, 1.5], |x_n| > 0.1 bounded by 1e-4 * lambda (lambda+dim) |x|^{lambda-2};
//   - u(x', x_n) == u(x', -x_n) exactly, and u depends only on (x_1, x_n).
// Deterministic for a fixed seed. Throws CheckFailed carrying the first
// violating sample; returns the aggregate report when everything passes.
CheckReport check_solution(const ExplicitSolution& sol, int samples,
                           std::uint64_t seed = 20260814u);

} // namespace freqgap
