#pragma once

// Brute-force verification of the closed-form solvers.
//
// The oracle knows nothing about the solution formulas: it evaluates the
// objectives directly on a regular lattice lower + step·k over a bounded box
// and compares the lattice minimum to the solver's claimed optimum. For
// integer problem data every optimum and every endpoint of the minimizer box
// lies on the half-integer lattice, so step 1/2 makes the comparison exact.

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "tropical/linalg.hpp"
#include "tropical/solvers.hpp"

namespace tropical::oracle {

inline constexpr std::uint64_t kMaxGridPoints = 10'000'000;
inline constexpr double kDefaultStep = 0.5;
inline constexpr std::size_t kDefaultSamples = 1000;
inline constexpr double kDefaultTolerance = 1e-9;

struct GridSpec {
  std::vector<double> lower;
  std::vector<double> upper;
  double step = kDefaultStep;
  // Faces synthesized from the data envelope rather than given by the
  // problem. Empty means every face is a genuine constraint.
  std::vector<bool> open_lower;
  std::vector<bool> open_upper;
};

struct OracleReport {
  Scalar min_value;
  TropVector argmin;
  std::uint64_t points_evaluated = 0;
  bool agrees_with_solver = false;
  double max_discrepancy = 0.0;
  // The lattice minimum is attained only on synthesized faces, so the
  // envelope may have cut off a better point.
  bool boundary_only_argmin = false;
  std::uint64_t inside_samples = 0;
  std::uint64_t outside_samples = 0;
  // Smallest objective excess over mu among sampled points outside [L, U].
  double min_outside_gap = std::numeric_limits<double>::infinity();
};

using Objective = std::function<Scalar(const TropVector&)>;
using Constraint = std::function<bool(const TropVector&)>;

// Number of lattice points in the box, saturating at UINT64_MAX.
std::uint64_t grid_size(const GridSpec& spec);

// Exhaustive minimization over the lattice. Points rejected by `feasible` are
// skipped. Ties resolve to the lexicographically smallest argmin, independent
// of `threads` (0 picks the hardware concurrency). The objective must be pure.
OracleReport grid_min(const Objective& objective, const GridSpec& spec,
                      const Constraint& feasible = {}, unsigned threads = 0);

// Search boxes. Given bounds are used as is; unbounded directions get the
// envelope [lo - R, hi + R] of the scalars that position x in that problem,
// with R = max(2 * (hi - lo), 1).
GridSpec search_box(const TwoSidedProblem& prob, double step = kDefaultStep);
GridSpec search_box(const MatrixLowerProblem& prob, double step = kDefaultStep);
GridSpec search_box_underestimator(const TropMatrix& a, const TropVector& p,
                                   double step = kDefaultStep);

struct VerifyOptions {
  double step = kDefaultStep;
  std::size_t samples = kDefaultSamples;
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 0x5eed;
  unsigned threads = 0;
};

// Checks both directions of the interval characterization: every sampled
// lattice point of [L, U] attains mu, every sampled feasible point outside
// exceeds it, and the lattice minimum over the feasible box equals mu.
// Throws Error(verification_failed) naming a counterexample.
OracleReport verify_interval(const TwoSidedProblem& prob, const IntervalSolution& sol,
                             const VerifyOptions& options = {});

// x >= g, objective(x) = mu, and the lattice minimum equals mu.
OracleReport verify_point(const MatrixLowerProblem& prob, const PointSolution& sol,
                          const VerifyOptions& options = {});

// A x <= p, (Ax)⁻p = mu, and the lattice minimum over feasible points equals mu.
OracleReport verify_underestimator(const TropMatrix& a, const TropVector& p,
                                   const PointSolution& sol, const VerifyOptions& options = {});

}  // namespace tropical::oracle
