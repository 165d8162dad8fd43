#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

/// Precomputed inequality data for counting lattice points of t·P by coordinate slicing.
///
/// Coordinates are fixed one at a time. For x_j the bounding constraints are the facets of
/// the projection of P onto x_0..x_j with nonzero x_j coefficient; the last two coordinates
/// are solved together from the facets of P grouped by their (x_{n-2}, x_{n-1})
/// coefficients. Within a group only the smallest partial value t·b + Σ a_i x_i matters.
///
/// Each constraint system is stored as a trie over its coefficient vectors, read from the
/// group key down to a_0. A level-i node covers the constraints sharing a_i..a_{m-1} (and the
/// key), and its value is the minimum of t·b + Σ_{i'<i} a_{i'} x_{i'} over them. Fixing x_i
/// lifts level-i values to level i+1, so deep slices touch only a few trie nodes.
struct CountingPlan {
  struct System {
    /// Number of leading coordinates folded in before the group minima are read.
    std::size_t depth = 0;
    /// Offsets of the level-0 nodes (distinct full coefficient vectors).
    std::vector<std::int64_t> offsets;
    /// coef[i][c]: coefficient of x_i shared by level-i node c, for i < depth.
    std::vector<std::vector<std::int64_t>> coef;
    /// children of level-i node p are level-(i-1) nodes [child_start[i][p], child_start[i][p+1]).
    std::vector<std::vector<std::size_t>> child_start;
    /// Key coefficients of each top-level node (one entry for slice levels, two for the leaf).
    std::vector<std::vector<std::int64_t>> group_key;
  };

  std::size_t dim = 0;
  /// levels[j] bounds x_j; present for j = 0..max(n-2, 0).
  std::vector<System> levels;
  /// Facets of P keyed by (x_{n-2}, x_{n-1}); used when n >= 2.
  System leaf;
  Integer max_offset;
  Integer max_coordinate;
  Integer coefficient_sum;
};

struct PointCounts {
  Integer total;
  Integer interior;
};

CountingPlan make_counting_plan(const LatticePolytope& p);

/// Reference single-threaded slicing counter.
PointCounts count_lattice_points_serial(const CountingPlan& plan, std::int64_t t);
/// Same algorithm, top-level slices distributed over OpenMP threads.
PointCounts count_lattice_points_parallel(const CountingPlan& plan, std::int64_t t);
/// Dispatches to the parallel kernel when OpenMP is available.
PointCounts count_lattice_points(const CountingPlan& plan, std::int64_t t);

/// All lattice points of t·P in lexicographic order (intended for small polytopes).
std::vector<LatticeVector> lattice_points(const LatticePolytope& p, std::int64_t t = 1);

/// Cap the number of worker threads used by parallel kernels (0 leaves the default).
void set_worker_threads(int threads);
int worker_threads();

}  // namespace toric
