#pragma once

// Shared helpers for the test suites: seeded random instance generators and a
// brute-force lattice enumerator that does not go through tropical::oracle.

#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "tropical/linalg.hpp"
#include "tropical/solvers.hpp"

namespace testing {

using tropical::Scalar;
using tropical::TropMatrix;
using tropical::TropVector;

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline TropVector random_int_vector(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::vector<double> v(n);
  for (auto& e : v) e = uniform_int(rng, lo, hi);
  return TropVector::from_values(v);
}

inline TropVector random_real_vector(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (auto& e : v) e = uniform_real(rng, lo, hi);
  return TropVector::from_values(v);
}

// Integer matrix where entries become zero with probability zero_rate, then
// repaired so that the matrix is regular.
inline TropMatrix random_int_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, int lo,
                                    int hi, double zero_rate = 0.0) {
  TropMatrix a(m, n);
  std::bernoulli_distribution zero(zero_rate);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = zero(rng) ? Scalar::zero() : Scalar(uniform_int(rng, lo, hi));
  while (!a.is_regular()) {
    const auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(m) - 1));
    const auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1));
    a(i, j) = Scalar(uniform_int(rng, lo, hi));
  }
  return a;
}

// Random two-sided problem with integer data in [lo, hi] and g <= h.
inline tropical::TwoSidedProblem random_two_sided(std::mt19937_64& rng, std::size_t n, int lo,
                                                  int hi, bool with_lower = true,
                                                  bool with_upper = true) {
  auto p = random_int_vector(rng, n, lo, hi);
  auto q = random_int_vector(rng, n, lo, hi);
  std::vector<double> g(n), h(n);
  for (std::size_t i = 0; i < n; ++i) {
    int a = uniform_int(rng, lo, hi), b = uniform_int(rng, lo, hi);
    if (a > b) std::swap(a, b);
    g[i] = a;
    h[i] = b;
  }
  tropical::TwoSidedProblem prob{std::move(p), std::move(q), std::nullopt, std::nullopt};
  if (with_lower) prob.lower = TropVector::from_values(g);
  if (with_upper) prob.upper = TropVector::from_values(h);
  return prob;
}

struct Enumeration {
  double min = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> argmins;  // every lattice minimizer
  std::uint64_t points = 0;
};

// Evaluates f at every point lower + step*k of the box and keeps all
// minimizers (within tol of the minimum).
inline Enumeration enumerate_box(const std::function<double(const TropVector&)>& f,
                                 const std::vector<double>& lower,
                                 const std::vector<double>& upper, double step,
                                 const std::function<bool(const TropVector&)>& keep = {},
                                 double tol = 1e-12) {
  Enumeration out;
  const std::size_t n = lower.size();
  std::vector<double> x = lower;
  while (true) {
    const auto v = TropVector::from_values(x);
    if (!keep || keep(v)) {
      const double value = f(v);
      ++out.points;
      if (value < out.min - tol) {
        out.min = value;
        out.argmins.clear();
      }
      if (value <= out.min + tol) out.argmins.push_back(x);
    }
    std::size_t d = n;
    while (d-- > 0) {
      x[d] += step;
      if (x[d] <= upper[d] + 1e-9) break;
      x[d] = lower[d];
    }
    if (d == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

}  // namespace testing
