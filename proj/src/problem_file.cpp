#include "tropical/problem_file.hpp"

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <set>

namespace tropical::io {
namespace {

constexpr std::string_view kZeroToken = "-inf";

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::parse_error, what); }

const Json& field(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) parse_fail(std::string("missing required field \"") + key + "\"");
  return *it;
}

TropVector vector_from_json(const Json& j, const char* key) {
  if (!j.is_array() || j.empty())
    parse_fail(std::string("\"") + key + "\" must be a nonempty array of scalars");
  std::vector<Scalar> elements;
  elements.reserve(j.size());
  for (const auto& e : j) elements.push_back(scalar_from_json(e));
  return TropVector(std::move(elements));
}

TropMatrix matrix_from_json(const Json& j, const char* key) {
  if (!j.is_array() || j.empty() || !j.front().is_array() || j.front().empty())
    parse_fail(std::string("\"") + key + "\" must be a nonempty array of nonempty row arrays");
  TropMatrix m(j.size(), j.front().size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols())
      throw Error(Errc::shape_mismatch, std::string("\"") + key + "\" has ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = scalar_from_json(j[i][c]);
  }
  return m;
}

std::optional<TropVector> optional_vector(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) return std::nullopt;
  return vector_from_json(*it, key);
}

Json vector_to_json(const TropVector& v) {
  Json out = Json::array();
  for (auto e : v) out.push_back(scalar_to_json(e));
  return out;
}

Json matrix_to_json(const TropMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

void require_size(const TropVector& v, std::size_t n, const char* key) {
  if (v.size() != n)
    throw Error(Errc::shape_mismatch, std::string("\"") + key + "\" must have " +
                                          std::to_string(n) + " entries, has " +
                                          std::to_string(v.size()));
}

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> payload_keys) {
  std::set<std::string> allowed{"kind", "name", "description"};
  for (const char* k : payload_keys) allowed.insert(k);
  for (const auto& [key, value] : j.items())
    if (!allowed.contains(key)) parse_fail("unknown field \"" + key + "\"");
}

std::optional<std::string> optional_string(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) return std::nullopt;
  if (!it->is_string()) parse_fail(std::string("\"") + key + "\" must be a string");
  return it->get<std::string>();
}

}  // namespace

std::string_view to_string(ProblemKind kind) noexcept {
  switch (kind) {
    case ProblemKind::two_sided: return "two_sided";
    case ProblemKind::matrix_lower: return "matrix_lower";
    case ProblemKind::locate: return "locate";
    case ProblemKind::approximate: return "approximate";
    case ProblemKind::best_under: return "best_under";
  }
  return "unknown";
}

ProblemKind parse_kind(std::string_view text) {
  for (auto kind : {ProblemKind::two_sided, ProblemKind::matrix_lower, ProblemKind::locate,
                    ProblemKind::approximate, ProblemKind::best_under})
    if (to_string(kind) == text) return kind;
  parse_fail("unknown problem kind \"" + std::string(text) + "\"");
}

// Integral values within the exactly representable range are written as
// JSON integers so that integer input survives a round trip unchanged.
Json scalar_to_json(Scalar s) {
  if (s.is_zero()) return Json(std::string(kZeroToken));
  const double v = s.value();
  if (std::trunc(v) == v && std::abs(v) <= 9007199254740992.0) {
    if (v == 0.0) return Json(0);  // also folds -0.0
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(v);
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) parse_fail("scalars must be finite numbers or \"-inf\"");
    return Scalar(v);
  }
  if (j.is_string() && j.get<std::string>() == kZeroToken) return Scalar::zero();
  parse_fail("invalid scalar " + j.dump() + "; expected a number or \"-inf\"");
}

ProblemFile parse_problem(const Json& j) {
  if (!j.is_object()) parse_fail("problem file must be a JSON object");
  const auto& kind_field = field(j, "kind");
  if (!kind_field.is_string()) parse_fail("\"kind\" must be a string");
  const auto kind = parse_kind(kind_field.get<std::string>());
  auto name = optional_string(j, "name");
  auto description = optional_string(j, "description");

  auto make = [&](Payload payload) {
    return ProblemFile{kind, std::move(name), std::move(description), std::move(payload)};
  };

  switch (kind) {
    case ProblemKind::two_sided: {
      reject_unknown_keys(j, {"p", "q", "g", "h"});
      TwoSidedProblem prob{vector_from_json(field(j, "p"), "p"),
                           vector_from_json(field(j, "q"), "q"), optional_vector(j, "g"),
                           optional_vector(j, "h")};
      const auto n = prob.p.size();
      require_size(prob.q, n, "q");
      if (prob.lower) require_size(*prob.lower, n, "g");
      if (prob.upper) require_size(*prob.upper, n, "h");
      return make(std::move(prob));
    }
    case ProblemKind::locate: {
      reject_unknown_keys(j, {"r", "s", "g", "h"});
      LocationProblem prob{vector_from_json(field(j, "r"), "r"),
                           vector_from_json(field(j, "s"), "s"), optional_vector(j, "g"),
                           optional_vector(j, "h")};
      const auto n = prob.r.size();
      require_size(prob.s, n, "s");
      if (prob.lower) require_size(*prob.lower, n, "g");
      if (prob.upper) require_size(*prob.upper, n, "h");
      return make(std::move(prob));
    }
    case ProblemKind::matrix_lower: {
      reject_unknown_keys(j, {"A", "p", "q", "g"});
      MatrixLowerProblem prob{matrix_from_json(field(j, "A"), "A"),
                              vector_from_json(field(j, "p"), "p"),
                              vector_from_json(field(j, "q"), "q"),
                              vector_from_json(field(j, "g"), "g")};
      require_size(prob.p, prob.a.rows(), "p");
      require_size(prob.q, prob.a.rows(), "q");
      require_size(prob.lower, prob.a.cols(), "g");
      return make(std::move(prob));
    }
    case ProblemKind::approximate: {
      reject_unknown_keys(j, {"A", "p", "g"});
      ApproximationProblem prob{matrix_from_json(field(j, "A"), "A"),
                                vector_from_json(field(j, "p"), "p"),
                                vector_from_json(field(j, "g"), "g")};
      require_size(prob.p, prob.a.rows(), "p");
      require_size(prob.lower, prob.a.cols(), "g");
      return make(std::move(prob));
    }
    case ProblemKind::best_under: {
      reject_unknown_keys(j, {"A", "p"});
      UnderestimatorProblem prob{matrix_from_json(field(j, "A"), "A"),
                                 vector_from_json(field(j, "p"), "p")};
      require_size(prob.p, prob.a.rows(), "p");
      return make(std::move(prob));
    }
  }
  parse_fail("unreachable problem kind");
}

ProblemFile parse_problem_text(std::string_view text) { return parse_problem(Json::parse(text)); }

Json to_json(const ProblemFile& problem) {
  Json out;
  out["kind"] = std::string(to_string(problem.kind));
  if (problem.name) out["name"] = *problem.name;
  if (problem.description) out["description"] = *problem.description;
  std::visit(
      [&out](const auto& prob) {
        using T = std::decay_t<decltype(prob)>;
        if constexpr (std::is_same_v<T, TwoSidedProblem>) {
          out["p"] = vector_to_json(prob.p);
          out["q"] = vector_to_json(prob.q);
          if (prob.lower) out["g"] = vector_to_json(*prob.lower);
          if (prob.upper) out["h"] = vector_to_json(*prob.upper);
        } else if constexpr (std::is_same_v<T, LocationProblem>) {
          out["r"] = vector_to_json(prob.r);
          out["s"] = vector_to_json(prob.s);
          if (prob.lower) out["g"] = vector_to_json(*prob.lower);
          if (prob.upper) out["h"] = vector_to_json(*prob.upper);
        } else if constexpr (std::is_same_v<T, MatrixLowerProblem>) {
          out["A"] = matrix_to_json(prob.a);
          out["p"] = vector_to_json(prob.p);
          out["q"] = vector_to_json(prob.q);
          out["g"] = vector_to_json(prob.lower);
        } else if constexpr (std::is_same_v<T, ApproximationProblem>) {
          out["A"] = matrix_to_json(prob.a);
          out["p"] = vector_to_json(prob.p);
          out["g"] = vector_to_json(prob.lower);
        } else {
          out["A"] = matrix_to_json(prob.a);
          out["p"] = vector_to_json(prob.p);
        }
      },
      problem.payload);
  return out;
}

Json solution_to_json(ProblemKind kind, const IntervalSolution& sol) {
  Json out;
  out["kind"] = std::string(to_string(kind));
  out["status"] = "ok";
  out["mu"] = scalar_to_json(sol.mu);
  out["delta"] = scalar_to_json(sol.delta);
  out["solution"] = {{"lower", vector_to_json(sol.lower)}, {"upper", vector_to_json(sol.upper)}};
  Json terms;
  terms["delta_term"] = scalar_to_json(sol.delta);
  if (sol.lower_term) terms["g_term"] = scalar_to_json(*sol.lower_term);
  if (sol.upper_term) terms["h_term"] = scalar_to_json(*sol.upper_term);
  out["diagnostics"] = std::move(terms);
  return out;
}

Json solution_to_json(ProblemKind kind, const PointSolution& sol) {
  Json out;
  out["kind"] = std::string(to_string(kind));
  out["status"] = "ok";
  out["mu"] = scalar_to_json(sol.mu);
  out["delta"] = scalar_to_json(sol.delta);
  out["solution"] = {{"x", vector_to_json(sol.x)}};
  Json terms;
  terms["delta_term"] = scalar_to_json(sol.delta);
  if (sol.lower_term) terms["g_term"] = scalar_to_json(*sol.lower_term);
  out["diagnostics"] = std::move(terms);
  return out;
}

Json error_to_json(std::optional<ProblemKind> kind, Errc code, std::string_view message) {
  Json out;
  if (kind) out["kind"] = std::string(to_string(*kind));
  out["status"] = "error";
  out["error"] = {{"reason", std::string(reason(code))}, {"message", std::string(message)}};
  return out;
}

Json report_to_json(ProblemKind kind, Scalar mu, const oracle::OracleReport& report) {
  Json out;
  out["kind"] = std::string(to_string(kind));
  out["status"] = "ok";
  out["solver_mu"] = scalar_to_json(mu);
  out["min_value"] = scalar_to_json(report.min_value);
  out["argmin"] = vector_to_json(report.argmin);
  out["points_evaluated"] = report.points_evaluated;
  out["agrees_with_solver"] = report.agrees_with_solver;
  out["max_discrepancy"] = report.max_discrepancy;
  out["boundary_only_argmin"] = report.boundary_only_argmin;
  out["inside_samples"] = report.inside_samples;
  out["outside_samples"] = report.outside_samples;
  if (std::isfinite(report.min_outside_gap)) out["min_outside_gap"] = report.min_outside_gap;
  return out;
}

}  // namespace tropical::io
