#pragma once

#include "freqgap/errors.hpp"

namespace freqgap {

// Separation constant of the degree-lambda homogeneous harmonic ansatz:
// mu = lambda * (lambda + dim - 2).
double mu(double lambda, int dim);

struct ProfileQuery {
    double lambda; // finite, > 0
    int dim;       // >= 2
    double mu;     // lambda * (lambda + dim - 2)
};

// Validates and builds a query. Throws InvalidFrequency / InvalidDimension.
ProfileQuery make_query(double lambda, int dim);

enum class Method { Series, Ode };

struct ProfilePoint {
    double phi; // colatitude in [0, pi/2]
    double p;   // profile value, p(0) = 1
    double dp;  // d p / d phi, dp(0) = 0
    double err; // bound on the absolute error in p and dp
};

// Radial profile of the degree-lambda ansatz: solves
//   p'' + (dim-2) cot(phi) p' + mu p = 0,  p(0) = 1, p'(0) = 0.
// Series: hypergeometric sum in z = (1 - cos phi)/2 with a geometric tail bound.
// Ode: even-power startup near 0, then adaptive Dormand-Prince 5(4).
ProfilePoint eval_profile(const ProfileQuery& q, double phi, Method method = Method::Series);

struct EndpointValues {
    double p_half;  // p(pi/2)
    double dp_half; // p'(pi/2)
    double err_p;
    double err_dp;
};

// Closed-form endpoint values at phi = pi/2:
//   p(pi/2)  =  sqrt(pi) Gamma((n-1)/2) / (Gamma((1-lambda)/2) Gamma((n-1+lambda)/2))
//   p'(pi/2) = -(mu/(n-1)) sqrt(pi) Gamma((n+1)/2) / (Gamma(1-lambda/2) Gamma((n+lambda)/2))
// Poles of the denominator give exact zeros: p(pi/2) = 0 iff lambda is an odd
// integer, p'(pi/2) = 0 iff lambda is an even integer (assigned analytically,
// never by thresholding).
EndpointValues endpoint_values(const ProfileQuery& q);

enum class Sign { Neg = -1, Zero = 0, Pos = 1 };

struct SignPair {
    Sign sign_p;
    Sign sign_dp;
};

// Signs of p(pi/2) and p'(pi/2): those of cos(lambda*pi/2) and -sin(lambda*pi/2),
// read off the residue of lambda mod 4. No trig evaluation near zeros.
SignPair endpoint_signs_predicted(double lambda);

// Sign of a computed value under the margin rule |value| > margin * err.
// Returns Zero only for value == 0 with err == 0 (analytic zero).
// Throws IndeterminateSign when the margin rule fails.
Sign certified_sign(double value, double err, double margin = 1000.0);

// Margin-certified signs of the computed endpoint values. Integer lambda gets its
// exact-zero component analytically; the other component must pass the margin rule.
SignPair endpoint_signs_certified(const ProfileQuery& q, double margin = 1000.0);

// Max discrepancy between the Series and Ode methods (p and dp) on a uniform
// grid over [0, pi/2] with grid_size >= 2 points, including the comparison of
// the Series values at pi/2 against the closed-form endpoint values.
double cross_validate(const ProfileQuery& q, int grid_size);

} // namespace freqgap
