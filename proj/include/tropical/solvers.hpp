#pragma once

// Closed-form solvers for conjugate-transpose objectives with boundary
// constraints.
//
//   two-sided:    minimize q⁻x ⊕ x⁻p          subject to g <= x <= h
//   matrix-lower: minimize q⁻Ax ⊕ (Ax)⁻p      subject to x >= g
//   underestimate: minimize (Ax)⁻p            subject to Ax <= p
//
// All minimization is over regular x. The two-sided solver returns the
// complete set of minimizers, which is always a box [lower, upper]; the
// matrix-lower solver returns one minimizer.

#include <optional>

#include "tropical/error.hpp"
#include "tropical/linalg.hpp"
#include "tropical/semifield.hpp"

namespace tropical {

template <Semifield F>
struct BasicTwoSidedProblem {
  BasicVector<F> p;
  BasicVector<F> q;
  std::optional<BasicVector<F>> lower;  // g; may contain zero entries
  std::optional<BasicVector<F>> upper;  // h; must be regular when present
};

template <Semifield F>
struct BasicMatrixLowerProblem {
  BasicMatrix<F> a;
  BasicVector<F> p;
  BasicVector<F> q;
  BasicVector<F> lower;  // g; zero entries leave a coordinate unbounded below
};

template <Semifield F>
struct BasicIntervalSolution {
  Element<F> mu;
  Element<F> delta;
  // q⁻g and h⁻p; empty when the corresponding bound is absent.
  std::optional<Element<F>> lower_term;
  std::optional<Element<F>> upper_term;
  BasicVector<F> lower;
  BasicVector<F> upper;
};

template <Semifield F>
struct BasicPointSolution {
  Element<F> mu;
  Element<F> delta;
  // Constraint term q⁻Ag of the optimum; empty for the underestimator.
  std::optional<Element<F>> lower_term;
  BasicVector<F> x;
};

namespace detail {

template <Semifield F>
void require_regular_column(const BasicVector<F>& v, std::size_t n, const char* name) {
  if (!v.is_column() || v.size() != n)
    throw Error(Errc::shape_mismatch, std::string(name) + " must be a column of size " +
                                          std::to_string(n));
  if (!v.is_regular()) throw Error(Errc::not_regular, std::string(name) + " must be regular");
}

template <Semifield F>
void require_column(const BasicVector<F>& v, std::size_t n, const char* name) {
  if (!v.is_column() || v.size() != n)
    throw Error(Errc::shape_mismatch, std::string(name) + " must be a column of size " +
                                          std::to_string(n));
}

}  // namespace detail

template <Semifield F>
void validate(const BasicTwoSidedProblem<F>& prob) {
  const std::size_t n = prob.p.size();
  detail::require_regular_column(prob.p, n, "p");
  detail::require_regular_column(prob.q, n, "q");
  if (prob.lower) detail::require_column(*prob.lower, n, "g");
  if (prob.upper) detail::require_regular_column(*prob.upper, n, "h");
  if (prob.lower && prob.upper && !leq(*prob.lower, *prob.upper))
    throw Error(Errc::infeasible_bounds, "lower bound g is not below upper bound h");
}

template <Semifield F>
void validate(const BasicMatrixLowerProblem<F>& prob) {
  if (!prob.a.is_regular()) throw Error(Errc::not_regular, "matrix A must be regular");
  detail::require_regular_column(prob.p, prob.a.rows(), "p");
  detail::require_regular_column(prob.q, prob.a.rows(), "q");
  detail::require_column(prob.lower, prob.a.cols(), "g");
}

template <Semifield F>
Element<F> objective_two_sided(const BasicTwoSidedProblem<F>& prob, const BasicVector<F>& x) {
  detail::require_regular_column(x, prob.p.size(), "x");
  detail::require_regular_column(prob.q, prob.p.size(), "q");
  // q⁻x ⊕ x⁻p, accumulated without forming the conjugates.
  auto acc = Element<F>::zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc += prob.q[i].inv() * x[i] + x[i].inv() * prob.p[i];
  return acc;
}

// True when g <= x <= h for the bounds that are present.
template <Semifield F>
bool is_feasible(const BasicTwoSidedProblem<F>& prob, const BasicVector<F>& x) {
  detail::require_regular_column(x, prob.p.size(), "x");
  return (!prob.lower || leq(*prob.lower, x)) && (!prob.upper || leq(x, *prob.upper));
}

template <Semifield F>
BasicIntervalSolution<F> solve_two_sided(const BasicTwoSidedProblem<F>& prob) {
  validate(prob);
  const auto q_conj = conjugate(prob.q);
  const auto delta = (q_conj * prob.p).sqrt();

  auto mu = delta;
  std::optional<Element<F>> lower_term, upper_term;
  if (prob.lower) {
    lower_term = q_conj * *prob.lower;
    mu += *lower_term;
  }
  std::optional<BasicVector<F>> h_conj;
  if (prob.upper) {
    h_conj = conjugate(*prob.upper);
    upper_term = *h_conj * prob.p;
    mu += *upper_term;
  }

  const auto mu_inv = mu.inv();
  auto lower = mu_inv * prob.p;
  if (prob.lower) lower = lower + *prob.lower;
  auto upper = h_conj ? conjugate(mu_inv * q_conj + *h_conj) : mu * prob.q;

  return {mu, delta, lower_term, upper_term, std::move(lower), std::move(upper)};
}

template <Semifield F>
Element<F> objective_matrix(const BasicMatrixLowerProblem<F>& prob, const BasicVector<F>& x) {
  detail::require_regular_column(x, prob.a.cols(), "x");
  detail::require_regular_column(prob.q, prob.a.rows(), "q");
  // q⁻(Ax) ⊕ (Ax)⁻p row by row; (Ax)ᵢ is nonzero since A is row-regular.
  auto acc = Element<F>::zero();
  for (std::size_t i = 0; i < prob.a.rows(); ++i) {
    auto row = Element<F>::zero();
    for (std::size_t j = 0; j < prob.a.cols(); ++j) row += prob.a(i, j) * x[j];
    if (row.is_zero()) throw Error(Errc::not_regular, "A x has a zero entry; A must be row-regular");
    acc += prob.q[i].inv() * row + row.inv() * prob.p[i];
  }
  return acc;
}

template <Semifield F>
bool is_feasible(const BasicMatrixLowerProblem<F>& prob, const BasicVector<F>& x) {
  detail::require_regular_column(x, prob.a.cols(), "x");
  return leq(prob.lower, x);
}

template <Semifield F>
BasicPointSolution<F> solve_matrix_lower(const BasicMatrixLowerProblem<F>& prob) {
  validate(prob);
  const auto q_conj_a = conjugate(prob.q) * prob.a;
  const auto base = conjugate(q_conj_a);  // (q⁻A)⁻
  const auto delta = (conjugate(prob.a * base) * prob.p).sqrt();
  const auto lower_term = q_conj_a * prob.lower;
  const auto mu = delta + lower_term;
  return {mu, delta, lower_term, mu * base};
}

// Objective (Ax)⁻p of the best-underestimator problem.
template <Semifield F>
Element<F> objective_underestimator(const BasicMatrix<F>& a, const BasicVector<F>& p,
                                    const BasicVector<F>& x) {
  detail::require_regular_column(x, a.cols(), "x");
  detail::require_regular_column(p, a.rows(), "p");
  return conjugate(a * x) * p;
}

// Best approximation of p from below by A x: the greatest x with A x <= p,
// which minimizes (Ax)⁻p over that constraint set. mu is the attained error
// and delta its square root.
template <Semifield F>
BasicPointSolution<F> best_underestimator(const BasicMatrix<F>& a, const BasicVector<F>& p) {
  auto x = max_solution_leq(a, p);
  const auto value = conjugate(a * x) * p;
  return {value, value.sqrt(), std::nullopt, std::move(x)};
}

using TwoSidedProblem = BasicTwoSidedProblem<MaxPlus>;
using MatrixLowerProblem = BasicMatrixLowerProblem<MaxPlus>;
using IntervalSolution = BasicIntervalSolution<MaxPlus>;
using PointSolution = BasicPointSolution<MaxPlus>;

}  // namespace tropical
