#pragma once

#include <stdexcept>

namespace freqgap {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// lambda is not finite and positive (or outside what the evaluator can represent).
struct InvalidFrequency : Error { using Error::Error; };

// dim < 2. The equator S^{dim-2} is empty for dim = 1 and the angular ODE degenerates.
struct InvalidDimension : Error { using Error::Error; };

// Series truncation bound did not fall below tolerance within the term cap.
struct NonconvergentSeries : Error { using Error::Error; };

// A value whose sign is needed fails the margin rule |value| > margin * err.
struct IndeterminateSign : Error { using Error::Error; };

// No eigenvalue branch found below the scan cap.
struct BranchNotFound : Error { using Error::Error; };

// Two supposedly equivalent routes disagreed. Always a bug; never swallowed.
struct InternalInconsistency : Error { using Error::Error; };

// Quadrature error estimate exceeded its acceptance threshold.
struct QuadratureFailure : Error { using Error::Error; };

} // namespace freqgap
