#include "tropical/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "tropical/problem_file.hpp"

namespace tropical::cli {
namespace {

using io::Json;
using io::ProblemKind;

struct IoFailure {
  std::string message;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure{"cannot open " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_all(const std::string& path, const Json& j, bool pretty) {
  const auto text = j.dump(pretty ? 2 : -1) + "\n";
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure{"cannot write " + path};
  out << text;
  if (!out) throw IoFailure{"write failed for " + path};
}

void print(std::ostream& out, const Json& j, bool pretty) {
  out << j.dump(pretty ? 2 : -1) << '\n';
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::grid_too_large: return kOracleCapacity;
    case Errc::verification_failed: return kDisagreement;
    default: return kInvalidProblem;
  }
}

// Runs `body` on the parsed problem, translating failures into exit codes.
// `report` receives the structured error document for problem-level errors.
template <class Body, class Report>
int guarded(const std::string& input_path, std::ostream& err, Body&& body, Report&& report) {
  std::optional<ProblemKind> kind;
  try {
    const auto problem = io::parse_problem_text(read_all(input_path));
    kind = problem.kind;
    return body(problem);
  } catch (const IoFailure& e) {
    err << "tropopt: " << e.message << '\n';
    return kIoError;
  } catch (const nlohmann::json::parse_error& e) {
    err << "tropopt: malformed JSON in " << input_path << ": " << e.what() << '\n';
    return kIoError;
  } catch (const Error& e) {
    err << "tropopt: " << reason(e.code()) << ": " << e.what() << '\n';
    try {
      report(io::error_to_json(kind, e.code(), e.what()));
    } catch (const IoFailure& io) {
      err << "tropopt: " << io.message << '\n';
      return kIoError;
    }
    return exit_code_for(e.code());
  }
}

Json solve(const io::ProblemFile& problem) {
  return std::visit(
      [&](const auto& prob) -> Json {
        using T = std::decay_t<decltype(prob)>;
        if constexpr (std::is_same_v<T, TwoSidedProblem>)
          return io::solution_to_json(problem.kind, solve_two_sided(prob));
        else if constexpr (std::is_same_v<T, LocationProblem>)
          return io::solution_to_json(problem.kind, locate(prob));
        else if constexpr (std::is_same_v<T, MatrixLowerProblem>)
          return io::solution_to_json(problem.kind, solve_matrix_lower(prob));
        else if constexpr (std::is_same_v<T, ApproximationProblem>)
          return io::solution_to_json(problem.kind, approximate(prob));
        else
          return io::solution_to_json(problem.kind, best_underestimator(prob.a, prob.p));
      },
      problem.payload);
}

struct Evaluation {
  Scalar value;
  bool feasible;
};

Evaluation evaluate(const io::ProblemFile& problem, const TropVector& x) {
  return std::visit(
      [&](const auto& prob) -> Evaluation {
        using T = std::decay_t<decltype(prob)>;
        if constexpr (std::is_same_v<T, TwoSidedProblem>) {
          validate(prob);
          return {objective_two_sided(prob, x), is_feasible(prob, x)};
        } else if constexpr (std::is_same_v<T, LocationProblem>) {
          const auto reduced = to_two_sided(prob);
          validate(reduced);
          return {location_objective(prob, x), is_feasible(reduced, x)};
        } else if constexpr (std::is_same_v<T, MatrixLowerProblem>) {
          validate(prob);
          return {objective_matrix(prob, x), is_feasible(prob, x)};
        } else if constexpr (std::is_same_v<T, ApproximationProblem>) {
          const auto reduced = to_matrix_lower(prob);
          validate(reduced);
          return {approximation_error(prob, x), is_feasible(reduced, x)};
        } else {
          const auto value = objective_underestimator(prob.a, prob.p, x);
          return {value, leq(prob.a * x, prob.p)};
        }
      },
      problem.payload);
}

Json verify(const io::ProblemFile& problem, const oracle::VerifyOptions& options) {
  return std::visit(
      [&](const auto& prob) -> Json {
        using T = std::decay_t<decltype(prob)>;
        if constexpr (std::is_same_v<T, TwoSidedProblem>) {
          const auto sol = solve_two_sided(prob);
          return io::report_to_json(problem.kind, sol.mu, oracle::verify_interval(prob, sol, options));
        } else if constexpr (std::is_same_v<T, LocationProblem>) {
          const auto reduced = to_two_sided(prob);
          const auto sol = solve_two_sided(reduced);
          return io::report_to_json(problem.kind, sol.mu,
                                    oracle::verify_interval(reduced, sol, options));
        } else if constexpr (std::is_same_v<T, MatrixLowerProblem>) {
          const auto sol = solve_matrix_lower(prob);
          return io::report_to_json(problem.kind, sol.mu, oracle::verify_point(prob, sol, options));
        } else if constexpr (std::is_same_v<T, ApproximationProblem>) {
          const auto reduced = to_matrix_lower(prob);
          const auto sol = solve_matrix_lower(reduced);
          return io::report_to_json(problem.kind, sol.mu,
                                    oracle::verify_point(reduced, sol, options));
        } else {
          const auto sol = best_underestimator(prob.a, prob.p);
          return io::report_to_json(problem.kind, sol.mu,
                                    oracle::verify_underestimator(prob.a, prob.p, sol, options));
        }
      },
      problem.payload);
}

}  // namespace

int solve_command(const std::string& input_path, const std::string& output_path, bool pretty,
                  std::ostream& err) {
  return guarded(
      input_path, err,
      [&](const io::ProblemFile& problem) {
        write_all(output_path, solve(problem), pretty);
        return kSuccess;
      },
      [&](const Json& error) { write_all(output_path, error, pretty); });
}

int eval_command(const std::string& input_path, const std::vector<double>& point, bool pretty,
                 std::ostream& out, std::ostream& err) {
  return guarded(
      input_path, err,
      [&](const io::ProblemFile& problem) {
        if (point.empty()) throw Error(Errc::shape_mismatch, "evaluation point is empty");
        const auto result = evaluate(problem, TropVector::from_values(point));
        Json j;
        j["kind"] = std::string(io::to_string(problem.kind));
        j["status"] = "ok";
        j["value"] = io::scalar_to_json(result.value);
        j["feasible"] = result.feasible;
        print(out, j, pretty);
        return kSuccess;
      },
      [&](const Json& error) { print(out, error, pretty); });
}

int verify_command(const std::string& input_path, const oracle::VerifyOptions& options,
                   bool pretty, std::ostream& out, std::ostream& err) {
  return guarded(
      input_path, err,
      [&](const io::ProblemFile& problem) {
        const auto report = verify(problem, options);
        print(out, report, pretty);
        return report["agrees_with_solver"].get<bool>() ? kSuccess : kDisagreement;
      },
      [&](const Json& error) { print(out, error, pretty); });
}

}  // namespace tropical::cli
