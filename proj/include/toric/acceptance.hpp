#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

struct CriterionResult {
  int id = 0;
  std::string suite;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Suite names in criterion order (1-based position = criterion id).
const std::vector<std::string>& acceptance_suites();

/// Runs one named suite, or every suite for "all". Unknown names throw kPrecondition.
std::vector<CriterionResult> run_acceptance(const std::string& suite);

/// Lattice points of t·P by scanning the bounding box against the facet inequalities.
/// Independent of the slicing counter; returns {total, interior}.
std::pair<Integer, Integer> naive_count(const LatticePolytope& p, long t);

/// Small polytopes from every constructor, used by the oracle comparison.
std::vector<std::pair<std::string, LatticePolytope>> builtin_polytopes(std::size_t max_dim);

}  // namespace toric
