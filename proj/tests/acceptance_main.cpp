#include <cstdio>
#include <exception>
#include <string>

#include "toric/acceptance.hpp"

// Prints one line per criterion; exits nonzero if any fails.
int main(int argc, char** argv) {
  const std::string suite = argc > 1 ? argv[1] : "all";
  bool all_passed = true;
  try {
    for (const auto& r : toric::run_acceptance(suite)) {
      std::printf("[%s] criterion %d (%s) %.2fs: %s\n", r.passed ? "PASS" : "FAIL", r.id, r.suite.c_str(), r.seconds,
                  r.detail.c_str());
      all_passed = all_passed && r.passed;
    }
  } catch (const std::exception& e) {
    std::printf("[FAIL] %s\n", e.what());
    return 2;
  }
  return all_passed ? 0 : 1;
}
