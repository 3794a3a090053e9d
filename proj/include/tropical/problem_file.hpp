#pragma once

// JSON problem and solution files.
//
// Scalars are JSON numbers; the zero element is the string "-inf". Matrices
// are arrays of row arrays. Every problem carries a "kind" discriminator and
// may carry "name" and "description" strings. Unknown keys are rejected.
//
//   two_sided     p, q, [g], [h]
//   matrix_lower  A, p, q, g
//   locate        r, s, [g], [h]
//   approximate   A, p, g
//   best_under    A, p
//
// docs/problem.schema.json and docs/solution.schema.json describe the same
// format.

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "tropical/applications.hpp"
#include "tropical/error.hpp"
#include "tropical/oracle.hpp"
#include "tropical/solvers.hpp"

namespace tropical::io {

using Json = nlohmann::ordered_json;

enum class ProblemKind { two_sided, matrix_lower, locate, approximate, best_under };

std::string_view to_string(ProblemKind kind) noexcept;
ProblemKind parse_kind(std::string_view text);

struct UnderestimatorProblem {
  TropMatrix a;
  TropVector p;
};

using Payload = std::variant<TwoSidedProblem, MatrixLowerProblem, LocationProblem,
                             ApproximationProblem, UnderestimatorProblem>;

struct ProblemFile {
  ProblemKind kind;
  std::optional<std::string> name;
  std::optional<std::string> description;
  Payload payload;
};

Json scalar_to_json(Scalar s);
Scalar scalar_from_json(const Json& j);

// Throws Error(parse_error) on schema violations and Error(shape_mismatch)
// when payload dimensions disagree. JSON syntax errors from the text overload
// surface as nlohmann::json::parse_error.
ProblemFile parse_problem(const Json& j);
ProblemFile parse_problem_text(std::string_view text);

Json to_json(const ProblemFile& problem);

Json solution_to_json(ProblemKind kind, const IntervalSolution& sol);
Json solution_to_json(ProblemKind kind, const PointSolution& sol);
Json error_to_json(std::optional<ProblemKind> kind, Errc code, std::string_view message);
Json report_to_json(ProblemKind kind, Scalar mu, const oracle::OracleReport& report);

}  // namespace tropical::io
