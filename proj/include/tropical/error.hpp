#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropical {

enum class Errc {
  zero_inverse,
  undefined_power,
  invalid_value,
  shape_mismatch,
  not_regular,
  not_column_regular,
  zero_vector,
  infeasible_bounds,
  grid_too_large,
  empty_grid,
  verification_failed,
  parse_error,
};

// Stable snake_case token, used as the "reason" field of CLI error output.
std::string_view reason(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tropical
