#include "tropical/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <thread>

namespace tropical::oracle {
namespace {

constexpr double kLatticeSlack = 1e-9;

std::uint64_t axis_points(double lower, double upper, double step) {
  return static_cast<std::uint64_t>(std::floor((upper - lower) / step + kLatticeSlack)) + 1;
}

void validate_spec(const GridSpec& spec) {
  const auto n = spec.lower.size();
  if (n == 0 || spec.upper.size() != n)
    throw Error(Errc::shape_mismatch, "grid bounds must be nonempty and of equal size");
  if (!(spec.step > 0) || !std::isfinite(spec.step))
    throw Error(Errc::invalid_value, "grid step must be positive");
  if ((!spec.open_lower.empty() && spec.open_lower.size() != n) ||
      (!spec.open_upper.empty() && spec.open_upper.size() != n))
    throw Error(Errc::shape_mismatch, "open-face flags must match the grid dimension");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(spec.lower[i]) || !std::isfinite(spec.upper[i]))
      throw Error(Errc::invalid_value, "grid bounds must be finite");
    if (spec.lower[i] > spec.upper[i])
      throw Error(Errc::empty_grid, "grid lower bound exceeds upper bound");
  }
}

std::string describe(const TropVector& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

[[noreturn]] void fail(const std::string& what, const TropVector& x) {
  throw Error(Errc::verification_failed, what + " at x = " + describe(x));
}

struct ChunkResult {
  double best = std::numeric_limits<double>::infinity();
  std::uint64_t best_index = 0;
  bool found = false;
  double best_interior = std::numeric_limits<double>::infinity();
  std::uint64_t evaluated = 0;
};

struct Lattice {
  const GridSpec& spec;
  std::vector<std::uint64_t> counts;

  explicit Lattice(const GridSpec& s) : spec(s) {
    for (std::size_t i = 0; i < s.lower.size(); ++i)
      counts.push_back(axis_points(s.lower[i], s.upper[i], s.step));
  }

  // Mixed-radix decode with the last coordinate fastest, so increasing index
  // is lexicographic order.
  void decode(std::uint64_t index, TropVector& x, bool& on_open_face) const {
    on_open_face = false;
    for (std::size_t d = counts.size(); d-- > 0;) {
      const auto k = index % counts[d];
      index /= counts[d];
      x[d] = Scalar(spec.lower[d] + spec.step * static_cast<double>(k));
      if ((!spec.open_lower.empty() && spec.open_lower[d] && k == 0) ||
          (!spec.open_upper.empty() && spec.open_upper[d] && k + 1 == counts[d]))
        on_open_face = true;
    }
  }
};

// Envelope of a set of finite scalars, widened by R = max(2 * spread, 1).
std::pair<double, double> envelope(const std::vector<double>& finite) {
  const auto [lo, hi] = std::minmax_element(finite.begin(), finite.end());
  const double r = std::max(2.0 * (*hi - *lo), 1.0);
  return {*lo - r, *hi + r};
}

void collect(std::vector<double>& out, const TropVector& v) {
  for (auto e : v)
    if (!e.is_zero()) out.push_back(e.value());
}

TropVector sample_box(std::mt19937_64& rng, const std::vector<double>& lower,
                      const std::vector<double>& upper, double step) {
  std::vector<double> x(lower.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::uniform_int_distribution<std::uint64_t> k(0, axis_points(lower[i], upper[i], step) - 1);
    x[i] = lower[i] + step * static_cast<double>(k(rng));
  }
  return TropVector::from_values(x);
}

}  // namespace

std::uint64_t grid_size(const GridSpec& spec) {
  validate_spec(spec);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < spec.lower.size(); ++i) {
    const auto c = axis_points(spec.lower[i], spec.upper[i], spec.step);
    if (total > std::numeric_limits<std::uint64_t>::max() / c)
      return std::numeric_limits<std::uint64_t>::max();
    total *= c;
  }
  return total;
}

OracleReport grid_min(const Objective& objective, const GridSpec& spec,
                      const Constraint& feasible, unsigned threads) {
  const auto total = grid_size(spec);
  if (total > kMaxGridPoints)
    throw Error(Errc::grid_too_large, "grid has " + std::to_string(total) +
                                          " points, cap is " + std::to_string(kMaxGridPoints));
  const Lattice lattice(spec);
  const auto n = spec.lower.size();

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (total < (1u << 14)) threads = 1;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

  std::vector<ChunkResult> results(threads);
  auto run = [&](unsigned chunk) {
    const auto begin = total * chunk / threads;
    const auto end = total * (chunk + 1) / threads;
    auto& result = results[chunk];
    auto x = TropVector::zeros(n);
    bool on_open_face = false;
    for (auto index = begin; index < end; ++index) {
      lattice.decode(index, x, on_open_face);
      if (feasible && !feasible(x)) continue;
      const double value = objective(x).value();
      ++result.evaluated;
      if (value < result.best || !result.found) {
        result.best = value;
        result.best_index = index;
        result.found = true;
      }
      if (!on_open_face) result.best_interior = std::min(result.best_interior, value);
    }
  };

  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned c = 0; c < threads; ++c) pool.emplace_back(run, c);
  }

  ChunkResult merged;
  for (const auto& r : results) {
    merged.evaluated += r.evaluated;
    merged.best_interior = std::min(merged.best_interior, r.best_interior);
    if (r.found && (!merged.found || r.best < merged.best)) {
      merged.best = r.best;
      merged.best_index = r.best_index;
      merged.found = true;
    }
  }
  if (!merged.found) throw Error(Errc::empty_grid, "no feasible lattice point in the box");

  auto argmin = TropVector::zeros(n);
  bool on_open_face = false;
  lattice.decode(merged.best_index, argmin, on_open_face);

  OracleReport report{Scalar(merged.best), argmin};
  report.points_evaluated = merged.evaluated;
  report.boundary_only_argmin = merged.best_interior > merged.best;
  return report;
}

GridSpec search_box(const TwoSidedProblem& prob, double step) {
  validate(prob);
  std::vector<double> finite;
  collect(finite, prob.p);
  collect(finite, prob.q);
  if (prob.lower) collect(finite, *prob.lower);
  if (prob.upper) collect(finite, *prob.upper);
  const auto [lo, hi] = envelope(finite);

  const auto n = prob.p.size();
  GridSpec spec{std::vector<double>(n, lo), std::vector<double>(n, hi), step,
                std::vector<bool>(n, true), std::vector<bool>(n, true)};
  for (std::size_t i = 0; i < n; ++i) {
    if (prob.lower && !(*prob.lower)[i].is_zero()) {
      spec.lower[i] = (*prob.lower)[i].value();
      spec.open_lower[i] = false;
    }
    if (prob.upper) {
      spec.upper[i] = (*prob.upper)[i].value();
      spec.open_upper[i] = false;
    }
  }
  return spec;
}

// In the matrix problems x_j sits on the scale of p_i - a_ij and q_i - a_ij,
// so the envelope is taken over those differences.
GridSpec search_box(const MatrixLowerProblem& prob, double step) {
  validate(prob);
  const auto& a = prob.a;
  std::vector<double> finite;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) {
        finite.push_back(prob.p[i].value() - a(i, j).value());
        finite.push_back(prob.q[i].value() - a(i, j).value());
      }
  collect(finite, prob.lower);
  const auto [lo, hi] = envelope(finite);

  const auto n = a.cols();
  GridSpec spec{std::vector<double>(n, lo), std::vector<double>(n, hi), step,
                std::vector<bool>(n, true), std::vector<bool>(n, true)};
  for (std::size_t j = 0; j < n; ++j)
    if (!prob.lower[j].is_zero()) {
      spec.lower[j] = prob.lower[j].value();
      spec.open_lower[j] = false;
    }
  return spec;
}

GridSpec search_box_underestimator(const TropMatrix& a, const TropVector& p, double step) {
  if (!p.is_column() || p.size() != a.rows())
    throw Error(Errc::shape_mismatch, "p must be a column with one entry per row of A");
  if (!a.is_column_regular()) throw Error(Errc::not_column_regular, "A must be column-regular");
  if (!p.is_regular()) throw Error(Errc::not_regular, "p must be regular");
  std::vector<double> finite;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) finite.push_back(p[i].value() - a(i, j).value());
  const auto [lo, hi] = envelope(finite);
  const auto n = a.cols();
  return GridSpec{std::vector<double>(n, lo), std::vector<double>(n, hi), step,
                  std::vector<bool>(n, true), std::vector<bool>(n, true)};
}

namespace {

void compare_minimum(OracleReport& report, Scalar mu, double tolerance) {
  report.max_discrepancy = std::max(report.max_discrepancy,
                                    std::abs(report.min_value.value() - mu.value()));
  if (report.min_value.value() < mu.value() - tolerance)
    fail("lattice point beats the claimed optimum " + std::to_string(mu.value()) + " with " +
             std::to_string(report.min_value.value()),
         report.argmin);
  if (report.min_value.value() > mu.value() + tolerance)
    fail("claimed optimum " + std::to_string(mu.value()) +
             " is not attained on the lattice; best is " +
             std::to_string(report.min_value.value()),
         report.argmin);
  report.agrees_with_solver = true;
}

}  // namespace

OracleReport verify_interval(const TwoSidedProblem& prob, const IntervalSolution& sol,
                             const VerifyOptions& options) {
  const auto box = search_box(prob, options.step);
  auto objective = [&prob](const TropVector& x) { return objective_two_sided(prob, x); };
  auto feasible = [&prob](const TropVector& x) { return is_feasible(prob, x); };

  if (!leq(sol.lower, sol.upper)) fail("solution interval is empty", sol.lower);
  if (!sol.upper.is_regular()) fail("upper endpoint is not regular", sol.upper);

  std::mt19937_64 rng(options.seed);
  double discrepancy = 0.0;
  std::uint64_t inside = 0;
  auto check_inside = [&](const TropVector& x) {
    if (!feasible(x)) fail("interval point violates the bounds", x);
    const double gap = std::abs(objective(x).value() - sol.mu.value());
    discrepancy = std::max(discrepancy, gap);
    if (gap > options.tolerance)
      fail("interval point has objective " + std::to_string(objective(x).value()) +
               " instead of " + std::to_string(sol.mu.value()),
           x);
    ++inside;
  };

  if (!sol.lower.is_regular()) fail("lower endpoint is not regular", sol.lower);
  const auto lo = sol.lower.values();
  const auto hi = sol.upper.values();
  check_inside(sol.lower);
  check_inside(sol.upper);
  for (std::size_t s = 0; s < options.samples; ++s)
    check_inside(sample_box(rng, lo, hi, options.step));

  double min_gap = std::numeric_limits<double>::infinity();
  std::uint64_t outside = 0;
  const std::size_t budget = 20 * options.samples;
  for (std::size_t draw = 0; draw < budget && outside < options.samples; ++draw) {
    const auto x = sample_box(rng, box.lower, box.upper, options.step);
    if (leq(sol.lower, x) && leq(x, sol.upper)) continue;
    const double gap = objective(x).value() - sol.mu.value();
    if (gap <= options.tolerance)
      fail("point outside the interval attains " + std::to_string(objective(x).value()) +
               " <= mu = " + std::to_string(sol.mu.value()),
           x);
    min_gap = std::min(min_gap, gap);
    ++outside;
  }

  auto report = grid_min(objective, box, {}, options.threads);
  report.max_discrepancy = discrepancy;
  report.inside_samples = inside;
  report.outside_samples = outside;
  report.min_outside_gap = min_gap;
  compare_minimum(report, sol.mu, options.tolerance);
  return report;
}

OracleReport verify_point(const MatrixLowerProblem& prob, const PointSolution& sol,
                          const VerifyOptions& options) {
  const auto box = search_box(prob, options.step);
  if (!sol.x.is_regular()) fail("solution is not regular", sol.x);
  if (!is_feasible(prob, sol.x)) fail("solution violates x >= g", sol.x);
  const double at_x = objective_matrix(prob, sol.x).value();
  if (std::abs(at_x - sol.mu.value()) > options.tolerance)
    fail("solution has objective " + std::to_string(at_x) + " instead of " +
             std::to_string(sol.mu.value()),
         sol.x);

  auto report = grid_min([&prob](const TropVector& x) { return objective_matrix(prob, x); }, box,
                         {}, options.threads);
  report.inside_samples = 1;
  report.max_discrepancy = std::abs(at_x - sol.mu.value());
  compare_minimum(report, sol.mu, options.tolerance);
  return report;
}

OracleReport verify_underestimator(const TropMatrix& a, const TropVector& p,
                                   const PointSolution& sol, const VerifyOptions& options) {
  const auto box = search_box_underestimator(a, p, options.step);
  if (!sol.x.is_regular()) fail("solution is not regular", sol.x);
  if (!leq(a * sol.x, p)) fail("solution violates A x <= p", sol.x);
  const double at_x = objective_underestimator(a, p, sol.x).value();
  if (std::abs(at_x - sol.mu.value()) > options.tolerance)
    fail("solution has objective " + std::to_string(at_x) + " instead of " +
             std::to_string(sol.mu.value()),
         sol.x);

  auto report = grid_min([&](const TropVector& x) { return objective_underestimator(a, p, x); },
                         box, [&](const TropVector& x) { return leq(a * x, p); }, options.threads);
  report.inside_samples = 1;
  report.max_discrepancy = std::abs(at_x - sol.mu.value());
  compare_minimum(report, sol.mu, options.tolerance);
  return report;
}

}  // namespace tropical::oracle
