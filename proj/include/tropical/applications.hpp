#pragma once

// Chebyshev location and approximation, expressed through the core solvers.

#include <optional>

#include "tropical/linalg.hpp"
#include "tropical/solvers.hpp"

namespace tropical {

// Place x within g <= x <= h so that the larger of the Chebyshev distances to
// the two points r and s is minimal.
struct LocationProblem {
  TropVector r;
  TropVector s;
  std::optional<TropVector> lower;
  std::optional<TropVector> upper;
};

// Best Chebyshev approximation of p by A x subject to x >= g.
struct ApproximationProblem {
  TropMatrix a;
  TropVector p;
  TropVector lower;
};

// p = r ⊕ s and q⁻ = r⁻ ⊕ s⁻, so q is the componentwise minimum of r and s.
inline TwoSidedProblem to_two_sided(const LocationProblem& prob) {
  detail::require_regular_column(prob.r, prob.r.size(), "r");
  detail::require_regular_column(prob.s, prob.r.size(), "s");
  return {prob.r + prob.s, conjugate(conjugate(prob.r) + conjugate(prob.s)), prob.lower,
          prob.upper};
}

inline MatrixLowerProblem to_matrix_lower(const ApproximationProblem& prob) {
  return {prob.a, prob.p, prob.p, prob.lower};
}

// max(rho(x, r), rho(x, s)).
inline Scalar location_objective(const LocationProblem& prob, const TropVector& x) {
  return distance(x, prob.r) + distance(x, prob.s);
}

// rho(A x, p).
inline Scalar approximation_error(const ApproximationProblem& prob, const TropVector& x) {
  return distance(prob.a * x, prob.p);
}

inline IntervalSolution locate(const LocationProblem& prob) {
  return solve_two_sided(to_two_sided(prob));
}

inline PointSolution approximate(const ApproximationProblem& prob) {
  return solve_matrix_lower(to_matrix_lower(prob));
}

}  // namespace tropical
