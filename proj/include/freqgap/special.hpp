#pragma once

#include <vector>

namespace freqgap {

// sin(pi*x), exactly zero when x is an integer.
double sinpi(double x);

// 1/Gamma(x), exactly zero when x is a non-positive integer (reflection through
// Gamma(1-x)*sin(pi*x)/pi on the left half-line).
double inv_gamma(double x);

struct QuadRule {
    std::vector<double> x; // nodes in (-1, 1), increasing
    std::vector<double> w; // positive weights, sum = 2
};

// Gauss-Legendre rule with n points; cached after first computation.
const QuadRule& gauss_legendre(int n);

} // namespace freqgap
