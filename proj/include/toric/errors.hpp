#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

/// Stable, machine-readable error categories shared by the library and the CLI.
enum class ErrorCode {
  kDimension,
  kDegenerateInput,
  kLowerDimensional,
  kPrecondition,
  kValidity,
  kNotGorenstein,
  kNotInFamily,
  kDomain,
  kParse,
  kOverflow,
  kInternal,
};

/// Snake-case identifier for an error code, e.g. "not_gorenstein".
std::string_view error_code_name(ErrorCode code);

class ToricError : public std::runtime_error {
 public:
  ToricError(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace toric
