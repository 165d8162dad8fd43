#pragma once

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "toric/errors.hpp"
#include "toric/polytope.hpp"

namespace toric::testing {

#define EXPECT_TORIC_ERROR(stmt, expected_code)                      \
  do {                                                               \
    try {                                                            \
      stmt;                                                          \
      ADD_FAILURE() << "expected ToricError from " #stmt;            \
    } catch (const ::toric::ToricError& e) {                         \
      EXPECT_EQ(e.code(), expected_code) << e.what();                \
    }                                                                \
  } while (0)

// Brute-force count over the bounding box using point-in-polytope tests.
inline std::pair<long, long> box_count(const LatticePolytope& p, long t) {
  const std::size_t n = p.dim();
  const LatticePolytope q = dilate(p, t);
  LatticeVector lo = q.vertices().front(), hi = lo;
  for (const auto& v : q.vertices())
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }
  long total = 0, interior = 0;
  LatticeVector x = lo;
  while (true) {
    if (q.contains(x)) ++total;
    if (q.contains_strictly(x)) ++interior;
    std::size_t i = 0;
    for (; i < n && x[i] == hi[i]; ++i) x[i] = lo[i];
    if (i == n) break;
    x[i] += 1;
  }
  return {total, interior};
}

inline LatticePolytope random_polytope(std::size_t n, std::mt19937_64& rng, int points, int radius) {
  std::uniform_int_distribution<long> coord(-radius, radius);
  while (true) {
    std::vector<LatticeVector> pts;
    for (int k = 0; k < points; ++k) {
      LatticeVector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = coord(rng);
      pts.push_back(v);
    }
    try {
      return LatticePolytope::hull(pts);
    } catch (const ToricError&) {
    }
  }
}

inline std::set<LatticeVector> image_set(const AffineUnimodularMap& m, const std::vector<LatticeVector>& vs) {
  std::set<LatticeVector> out;
  for (const auto& v : vs) out.insert(m.apply(v));
  return out;
}

inline bool maps_vertices_onto(const AffineUnimodularMap& m, const LatticePolytope& from, const LatticePolytope& to) {
  return image_set(m, from.vertices()) == std::set<LatticeVector>(to.vertices().begin(), to.vertices().end());
}

}  // namespace toric::testing
