#include "tropical/error.hpp"

namespace tropical {

std::string_view reason(Errc code) noexcept {
  switch (code) {
    case Errc::zero_inverse: return "zero_inverse";
    case Errc::undefined_power: return "undefined_power";
    case Errc::invalid_value: return "invalid_value";
    case Errc::shape_mismatch: return "shape_mismatch";
    case Errc::not_regular: return "not_regular";
    case Errc::not_column_regular: return "not_column_regular";
    case Errc::zero_vector: return "zero_vector";
    case Errc::infeasible_bounds: return "infeasible_bounds";
    case Errc::grid_too_large: return "grid_too_large";
    case Errc::empty_grid: return "empty_grid";
    case Errc::verification_failed: return "verification_failed";
    case Errc::parse_error: return "parse_error";
  }
  return "unknown";
}

}  // namespace tropical
