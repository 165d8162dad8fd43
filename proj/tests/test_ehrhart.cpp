#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"
#include "toric/constructions.hpp"
#include "toric/ehrhart.hpp"
#include "toric/roots.hpp"

namespace toric {
namespace {

// Eulerian numbers A(n, k) by the standard recurrence.
std::vector<Integer> eulerian_row(std::size_t n) {
  std::vector<Integer> row{1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Integer> next(m + 1, 0);
    for (std::size_t k = 0; k < m; ++k) {
      next[k] += Integer(static_cast<long>(k + 1)) * row[k];
      next[k + 1] += Integer(static_cast<long>(m - k - 1)) * row[k];
    }
    row = next;
  }
  row.resize(n + 1, 0);
  return row;
}

TEST(Ehrhart, SimplexHasTrivialHStar) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Integer> expected(n + 1, 0);
    expected[0] = 1;
    EXPECT_EQ(ehrhart(standard_simplex(n)).hstar(), HStarVector(expected));
  }
}

TEST(Ehrhart, UnitCubeGivesEulerianNumbers) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::vector<Integer> row = eulerian_row(n);
    // A(n, k) counts permutations with k descents, so the row sums to n!.
    Integer sum = 0;
    for (const auto& x : row) sum += x;
    EXPECT_EQ(sum, factorial(n));
    EXPECT_EQ(ehrhart(cube(n, 0, 1)).hstar(), HStarVector(row));
  }
}

TEST(Ehrhart, CrossPolytopeGivesBinomialRow) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const HStarVector h = ehrhart(cross_polytope(n)).hstar();
    EXPECT_EQ(h, HStarVector::binomial_row(n, n));
    EXPECT_TRUE(hibi_palindromic(h));
    EXPECT_TRUE(gorenstein_palindromic(h, 1));
  }
}

TEST(Ehrhart, MonomialCoefficientsOfUnitCube) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto c = ehrhart(cube(n, 0, 1)).monomial_coefficients();
    ASSERT_EQ(c.size(), n + 1);
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(c[k], Rational(binomial(static_cast<long>(n), k)));
  }
  // Leading coefficient is the Euclidean volume.
  const auto s = ehrhart(standard_simplex(4)).monomial_coefficients();
  EXPECT_EQ(s.back(), Rational(1, 24));
}

TEST(Ehrhart, EvaluateMatchesCountingAndReciprocity) {
  std::mt19937_64 rng(211);
  for (int trial = 0; trial < 6; ++trial) {
    const LatticePolytope p = testing::random_polytope(3, rng, 8, 2);
    const EhrhartPolynomial l = ehrhart(p);
    for (long t = 1; t <= 5; ++t) {
      const auto [total, interior] = testing::box_count(p, t);
      EXPECT_EQ(l.evaluate(t), total);
      EXPECT_EQ(l.evaluate_interior(t), interior);
    }
    EXPECT_EQ(l.evaluate(0L), 1);
  }
}

TEST(Ehrhart, HStarAccessors) {
  const HStarVector h{1, 3, 3, 1};
  EXPECT_EQ(h.dim(), 3u);
  EXPECT_EQ(h.at(-1), 0);
  EXPECT_EQ(h.at(4), 0);
  EXPECT_EQ(h.degree(), 3);
  EXPECT_EQ(h.sum(), 8);
  EXPECT_EQ(HStarVector({1, 1, 0}).degree(), 1);
  EXPECT_EQ(HStarVector::binomial_row(4, 2), HStarVector({1, 2, 1, 0, 0}));
}

TEST(Ehrhart, PalindromeChecks) {
  EXPECT_TRUE(gorenstein_palindromic(HStarVector{1, 1, 1, 0}, 2));
  EXPECT_FALSE(hibi_palindromic(HStarVector{1, 1, 1, 0}));
  EXPECT_TRUE(gorenstein_palindromic(HStarVector{1, 2, 2, 1, 0}, 2));
  EXPECT_FALSE(gorenstein_palindromic(HStarVector{1, 2, 1, 1, 0}, 2));
  EXPECT_FALSE(gorenstein_palindromic(HStarVector{1, 0}, 3));
}

TEST(Ehrhart, ContactBettiPartialSums) {
  const BettiSequence b = contact_betti(HStarVector{1, 3, 3, 1});
  EXPECT_EQ(b.values, (std::vector<Integer>{1, 4, 7, 8}));
  EXPECT_EQ(b.at(-1), 0);
  EXPECT_EQ(b.at(10), 8);
  const BettiSequence s = contact_betti(HStarVector{1, 1, 1, 0});
  EXPECT_EQ(s.values, (std::vector<Integer>{0, 1, 2, 3}));
}

TEST(Ehrhart, SeriesProductAndQuotientBetti) {
  EXPECT_TRUE(series_product_check(HStarVector{1, 2, 1}, HStarVector{1, 1}, 2, 1));
  EXPECT_TRUE(series_product_check(HStarVector{1, 1, 1, 1}, HStarVector{1, 1}, 2, 2));
  EXPECT_FALSE(series_product_check(HStarVector{1, 3, 3, 1}, HStarVector{1, 1}, 2, 1));
  EXPECT_TORIC_ERROR(series_product_check(HStarVector{1}, HStarVector{1}, 0, 1), ErrorCode::kPrecondition);

  // Σ_{k>=0} h_{i-rk-r+1} by hand for h = (1,3,3,1), r = 2.
  const HStarVector h{1, 3, 3, 1};
  EXPECT_EQ(betti_from_quotient(h, 2, 0), 0);
  EXPECT_EQ(betti_from_quotient(h, 2, 1), 1);
  EXPECT_EQ(betti_from_quotient(h, 2, 2), 3);
  EXPECT_EQ(betti_from_quotient(h, 2, 3), 4);
  EXPECT_EQ(betti_from_quotient(h, 2, 4), 4);
  EXPECT_TORIC_ERROR(betti_from_quotient(h, 0, 1), ErrorCode::kPrecondition);
}

TEST(Ehrhart, QuotientBettiOfCrossMatchesSmallCross) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const HStarVector hd = ehrhart(cross_polytope(n)).hstar();
    const BettiSequence b = contact_betti(ehrhart(small_cross_polytope(n)).hstar());
    for (long i = 0; i <= static_cast<long>(n) + 2; ++i) EXPECT_EQ(betti_from_quotient(hd, 2, i), b.at(i));
  }
}

TEST(Roots, QuadraticAndCrossPolytopeLine) {
  const auto r = polynomial_roots({Rational(-2), Rational(0), Rational(1)});
  ASSERT_EQ(r.size(), 2u);
  for (const auto& z : r) EXPECT_NEAR(std::abs(z.real()), std::sqrt(2.0), 1e-12);
  for (std::size_t n = 2; n <= 8; ++n) {
    const RootReport rep = root_real_parts(ehrhart(cross_polytope(n)), -0.5, 1e-9);
    EXPECT_EQ(rep.roots.size(), n);
    EXPECT_TRUE(rep.verdict) << "n=" << n << " deviation " << rep.max_deviation;
  }
}

TEST(Roots, VerdictFailsOffTheLine) {
  const RootReport rep = root_real_parts(ehrhart(standard_simplex(3)), -0.5, 1e-9);
  EXPECT_FALSE(rep.verdict);
  EXPECT_GT(rep.max_deviation, 0.4);
  EXPECT_TORIC_ERROR(root_real_parts(EhrhartPolynomial(HStarVector{1}), -0.5), ErrorCode::kPrecondition);
}

}  // namespace
}  // namespace toric
