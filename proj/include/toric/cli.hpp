#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "toric/json_io.hpp"

namespace toric::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kDomainError = 3 };

struct CommandResult {
  /// "ok", "failed" (verification) or "error".
  std::string status;
  Json payload;
  double elapsed_ms = 0.0;
  int exit_code = kOk;
  bool pretty = false;
};

/// Runs one command line (without the program name). "-" as a file argument reads `in`.
CommandResult run(const std::vector<std::string>& args, std::istream& in);

/// {"status", "payload", "elapsed_ms"} as a single JSON document.
std::string render(const CommandResult& result);

}  // namespace toric::cli
