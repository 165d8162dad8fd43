#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "toric/constructions.hpp"
#include "toric/ehrhart.hpp"
#include "toric/lattice_count.hpp"

namespace toric {
namespace {

using testing::box_count;
using testing::random_polytope;

TEST(Counting, SerialAndParallelMatchBoxCount) {
  std::mt19937_64 rng(101);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 8; ++trial) {
      const LatticePolytope p = random_polytope(n, rng, static_cast<int>(n) + 4, 3);
      const CountingPlan plan = make_counting_plan(p);
      for (long t = 1; t <= (n <= 2 ? 4 : 2); ++t) {
        const auto [total, interior] = box_count(p, t);
        const PointCounts s = count_lattice_points_serial(plan, t);
        const PointCounts q = count_lattice_points_parallel(plan, t);
        EXPECT_EQ(s.total, total) << "n=" << n << " t=" << t;
        EXPECT_EQ(s.interior, interior) << "n=" << n << " t=" << t;
        EXPECT_EQ(q.total, s.total);
        EXPECT_EQ(q.interior, s.interior);
      }
    }
}

TEST(Counting, DilationZeroIsOnePoint) {
  const CountingPlan plan = make_counting_plan(cross_polytope(3));
  EXPECT_EQ(count_lattice_points_serial(plan, 0).total, 1);
}

TEST(Counting, CrossPolytopeClosedForm) {
  // |t·◊_n ∩ Z^n| = Σ_k 2^k C(n,k) C(t,k).
  for (std::size_t n = 1; n <= 6; ++n)
    for (long t = 1; t <= 5; ++t) {
      Integer expected = 0;
      for (unsigned long k = 0; k <= n; ++k)
        expected += Integer(1UL << k) * binomial(static_cast<long>(n), k) * binomial(t, k);
      EXPECT_EQ(count_points(cross_polytope(n), t), expected);
    }
}

TEST(Counting, CubeCounts) {
  for (std::size_t n = 1; n <= 5; ++n) {
    Integer expected = 1, inner = 1;
    for (std::size_t i = 0; i < n; ++i) {
      expected *= 7;
      inner *= 5;
    }
    EXPECT_EQ(count_points(cube(n, 0, 2), 3), expected);
    EXPECT_EQ(count_interior(cube(n, 0, 2), 3), inner);
    EXPECT_EQ(count_boundary(cube(n, 0, 2), 3), expected - inner);
  }
}

TEST(Counting, LatticePointsListing) {
  const auto pts = lattice_points(small_cross_polytope(2));
  EXPECT_EQ(pts, (std::vector<LatticeVector>{{-1, 1}, {0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(lattice_points(cross_polytope(3), 2).size(), 25u);
  for (const auto& x : lattice_points(standard_simplex(3), 3)) {
    Integer s = 0;
    for (const auto& c : x) {
      EXPECT_GE(c, 0);
      s += c;
    }
    EXPECT_LE(s, 3);
  }
}

TEST(Counting, ReciprocityOnRandomPolytopes) {
  std::mt19937_64 rng(103);
  for (std::size_t n = 2; n <= 3; ++n)
    for (int trial = 0; trial < 6; ++trial) {
      const LatticePolytope p = random_polytope(n, rng, 7, 3);
      const EhrhartPolynomial l = ehrhart(p);
      for (long t = 1; t <= 3; ++t) EXPECT_EQ(l.evaluate_interior(t), count_interior(p, t));
    }
}

TEST(Counting, WorkerThreadSetting) {
  const int before = worker_threads();
  set_worker_threads(1);
  EXPECT_EQ(worker_threads(), 1);
  EXPECT_EQ(count_points(cross_polytope(4), 3), 129);
  set_worker_threads(before);
  EXPECT_EQ(worker_threads(), before);
}

}  // namespace
}  // namespace toric
