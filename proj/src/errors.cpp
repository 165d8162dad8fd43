#include "toric/errors.hpp"

namespace toric {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimension: return "dimension_error";
    case ErrorCode::kDegenerateInput: return "degenerate_input";
    case ErrorCode::kLowerDimensional: return "lower_dimensional";
    case ErrorCode::kPrecondition: return "precondition_failed";
    case ErrorCode::kValidity: return "validity_error";
    case ErrorCode::kNotGorenstein: return "not_gorenstein";
    case ErrorCode::kNotInFamily: return "not_in_family";
    case ErrorCode::kDomain: return "domain_error";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kInternal: return "internal_error";
  }
  return "unknown";
}

ToricError::ToricError(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw ToricError(code, message); }

}  // namespace toric
