#pragma once

#include <vector>

#include "freqgap/profile.hpp"

namespace freqgap {

struct OscillationReport {
    std::vector<double> zeros; // zeros of p in the open interval (0, pi/2), increasing
    std::vector<double> crits; // zeros of dp in (0, pi/2), increasing
    int total;                 // zeros.size() + crits.size()
};

// Finds all zeros and critical points of the profile on (0, pi/2) by sign-change
// scanning on a grid of max(64, 16*ceil(lambda)) cells plus bisection to width
// 1e-12. Verifies (does not assume) that the merged special points strictly
// alternate starting with a zero of p, and that total = floor(lambda) for
// non-integer lambda; the grid is doubled and the search retried on suspicion.
OscillationReport find_special_points(const ProfileQuery& q);

// True when every open interval between consecutive zeros of the lower profile,
// together with (0, first zero), contains a zero of the higher profile.
// Vacuously true when the lower profile has no zeros.
bool interlacing_check(const ProfileQuery& q_low, const ProfileQuery& q_high);

enum class CapKind { Dirichlet, Neumann };

struct CapQuery {
    double theta; // cap aperture in (0, pi/2]
    int dim;      // >= 2
    CapKind kind;
    int branch;   // >= 1
};

// branch-th smallest lambda > 0 with p_lambda(theta) = 0 (Dirichlet) or
// p_lambda'(theta) = 0 (Neumann). Scans lambda in steps of 0.25 up to 50 and
// refines each bracket by bisection to width 1e-10. The associated cap
// eigenvalue is mu(lambda, dim). Throws BranchNotFound past the scan cap.
double cap_frequency(const CapQuery& cq);

enum class GapStatus { Excluded, NotExcluded, IntegerBoundary, Indeterminate };

struct GapVerdict {
    GapStatus status;
    int k;               // meaningful for Excluded: lambda lies in (2k, 2k+1)
    double sign_product; // p(pi/2) * p'(pi/2)
    bool margin_ok;      // both endpoint values passed the margin rule
};

// Certifies whether lambda lies in a forbidden interval (2k, 2k+1):
// exactly-integer lambda -> IntegerBoundary; |lambda - round(lambda)| < 1e-8 ->
// Indeterminate; margin failure -> Indeterminate; otherwise the sign product
// decides, cross-checked against the arithmetic predicate "floor(lambda) even"
// and against the mod-4 sign prediction. Disagreement throws
// InternalInconsistency (a bug, never swallowed).
GapVerdict gap_verdict(const ProfileQuery& q);

} // namespace freqgap
