#ifndef EVGAM_ERRORS_HPP
#define EVGAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace evgam {

// Error taxonomy. Each class maps onto one failure mode of the public API so
// callers (and the CLI exit-code mapping) can discriminate without string
// matching.

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter outside the open domain of a family/distribution.
struct DomainError : Error { using Error::Error; };
// Angular observation on or beyond the simplex boundary.
struct BoundaryError : Error { using Error::Error; };
// Malformed argument (basis configuration, sizes, counts).
struct ArgumentError : Error { using Error::Error; };
// Adaptive integration failed to reach its tolerance.
struct QuadratureError : Error { using Error::Error; };
// Column/role mismatch between a model and a dataset.
struct SchemaError : Error { using Error::Error; };
// Unreadable cell or row in an input file; message carries row/column.
struct ParseError : Error { using Error::Error; };
// A quantity became ill-posed (constant smooth covariate, EDF >= n, ...).
struct DegenerateError : Error { using Error::Error; };
// Penalized normal system rank-deficient beyond the structural null space.
struct SingularSystem : Error { using Error::Error; };
// Information matrix not invertible; message names the near-null direction.
struct SingularInformation : Error { using Error::Error; };
// LRT models do not nest.
struct NestingError : Error { using Error::Error; };
// Pseudo-sample below the configured size floor.
struct TooFewExceedances : Error { using Error::Error; };
// No feasible GPD optimum (support constraint excludes an excess).
struct SupportViolation : Error { using Error::Error; };
// Iterative optimizer exhausted its budget and no fallback applies.
struct NonConvergenceError : Error { using Error::Error; };
// Rejection envelope unusable even after rebuilds.
struct EnvelopeError : Error { using Error::Error; };
// Conditional-CDF inversion could not bracket its root.
struct InversionError : Error { using Error::Error; };

}  // namespace evgam

#endif
