#pragma once

#include "freqgap/profile.hpp"
#include "freqgap/solutions.hpp"

namespace freqgap {

struct EquatorIntegrals {
    double int_u;    // integral of u over the equator sphere S^{dim-2} = {|x|=1, x_n=0}
    double int_un;   // integral of the one-sided normal derivative u_n
    double quad_err; // combined quadrature error estimate
};

// Integrates u and u_n over the equator. dim = 2: two-point sum at +-e_1.
// dim = 3: periodic trapezoidal rule on the unit circle (polynomial families;
// the kinked 2k+3/2 family uses the graded rule below). dim >= 4: weighted rule
//   int_{-1}^{1} f(s) (1-s^2)^{(dim-4)/2} ds * |S^{dim-3}|,
// evaluated after s = cos(psi) as composite Gauss-Legendre panels geometrically
// graded into s = 0, where the 2k+3/2 family has a kink. Throws
// QuadratureFailure when an error estimate exceeds 1e-9 * (1 + |result|).
EquatorIntegrals equator_integrals(const ExplicitSolution& sol);

struct IdentityReport {
    double lhs;          // -p'(pi/2) * int_u
    double rhs;          //  p(pi/2)  * int_un
    double residual_abs; // |lhs - rhs|
    double residual_rel;
    bool pass;           // residual_rel <= 1e-8
};

// residual_rel = residual_abs / max(|lhs|, |rhs|, 1e-12 * scale) with
// scale = (1 + |p_half| + |dp_half|) (1 + |int_u| + |int_un|), so the exact
// 0 = 0 cases (odd/even integer lambda) pass without inflating the ratio.
IdentityReport identity_report(const EndpointValues& ev, const EquatorIntegrals& ints);

// Spherical integration-by-parts balance for a homogeneous solution:
//   -p'(pi/2) int_u = p(pi/2) int_un.
IdentityReport verify_identity(const ExplicitSolution& sol);

} // namespace freqgap
