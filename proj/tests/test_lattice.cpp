#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "toric/arith.hpp"
#include "toric/lattice.hpp"

namespace toric {
namespace {

using testing::image_set;

Integer cofactor_det(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Integer s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntegerMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, k++) = m(r, cc);
    const Integer term = m(0, c) * cofactor_det(minor);
    s += c % 2 == 0 ? term : Integer(-term);
  }
  return s;
}

IntegerMatrix random_matrix(std::size_t n, std::mt19937_64& rng, long radius) {
  std::uniform_int_distribution<long> d(-radius, radius);
  IntegerMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = d(rng);
  return m;
}

TEST(Arith, BinomialIncludingNegativeUpper) {
  EXPECT_EQ(binomial(5L, 2), 10);
  EXPECT_EQ(binomial(3L, 5), 0);
  EXPECT_EQ(binomial(-1L, 3), -1);
  EXPECT_EQ(binomial(-2L, 2), 3);
  EXPECT_EQ(factorial(6), 720);
}

TEST(Arith, FloorAndCeilDivision) {
  EXPECT_EQ(floor_div(Integer(-7), Integer(2)), -4);
  EXPECT_EQ(ceil_div(Integer(-7), Integer(2)), -3);
  EXPECT_EQ(floor_div(Integer(7), Integer(-2)), -4);
  EXPECT_EQ(ceil_div(Integer(6), Integer(3)), 2);
}

TEST(Arith, ParsingAndFormatting) {
  EXPECT_EQ(parse_integer("-123456789012345678901234567890"), Integer("-123456789012345678901234567890"));
  EXPECT_EQ(to_string(parse_rational("6/-4")), "-3/2");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_TORIC_ERROR(parse_integer("12x"), ErrorCode::kParse);
  EXPECT_TORIC_ERROR(parse_rational("1/0"), ErrorCode::kParse);
  EXPECT_TORIC_ERROR(to_int64(Integer("100000000000000000000")), ErrorCode::kOverflow);
}

TEST(Lattice, DeterminantMatchesCofactorExpansion) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const IntegerMatrix m = random_matrix(n, rng, 4);
      EXPECT_EQ(determinant(m), cofactor_det(m));
    }
}

TEST(Lattice, DeterminantOfSingularAndNonSquare) {
  EXPECT_EQ(determinant(IntegerMatrix{{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(determinant(IntegerMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_TORIC_ERROR(determinant(IntegerMatrix(2, 3)), ErrorCode::kDimension);
}

TEST(Lattice, PrimitiveAndBezout) {
  EXPECT_EQ(primitive(LatticeVector{4, -6, 8}), (LatticeVector{2, -3, 4}));
  EXPECT_EQ(content(LatticeVector{4, -6, 8}), 2);
  EXPECT_TORIC_ERROR(primitive(LatticeVector(3)), ErrorCode::kDegenerateInput);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int trial = 0; trial < 50; ++trial) {
    LatticeVector a{d(rng), d(rng), d(rng), d(rng)};
    if (a.is_zero()) continue;
    EXPECT_EQ(dot(a, bezout_vector(a)), content(a));
  }
}

TEST(Lattice, HermiteCompletionIsUnimodularWithLastRowC) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-9, 9);
  int tested = 0;
  while (tested < 60) {
    LatticeVector c{d(rng), d(rng), d(rng), d(rng)};
    if (c.is_zero() || content(c) != 1) continue;
    const IntegerMatrix t = hermite_completion(c);
    EXPECT_EQ(t.row(3), c);
    const Integer det = determinant(t);
    EXPECT_TRUE(det == 1 || det == -1);
    ++tested;
  }
  EXPECT_TORIC_ERROR(hermite_completion(LatticeVector{2, 4}), ErrorCode::kPrecondition);
}

TEST(Lattice, HermiteCompletionUnitEntryFastPath) {
  // First ±1 entry is pivoted out; the other rows are unit vectors.
  const IntegerMatrix t = hermite_completion(LatticeVector{0, 0, 0, 1});
  EXPECT_EQ(t, IntegerMatrix::identity(4));
  const IntegerMatrix u = hermite_completion(LatticeVector{1, 1, 2});
  EXPECT_EQ(u, (IntegerMatrix{{0, 1, 0}, {0, 0, 1}, {1, 1, 2}}));
}

TEST(Lattice, InverseUnimodular) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const AffineUnimodularMap m = random_affine_unimodular(4, rng);
    EXPECT_EQ(m.linear() * inverse_unimodular(m.linear()), IntegerMatrix::identity(4));
  }
  EXPECT_TORIC_ERROR(inverse_unimodular(IntegerMatrix{{2, 0}, {0, 1}}), ErrorCode::kPrecondition);
}

TEST(Lattice, IntegerNullspaceAnnihilates) {
  const IntegerMatrix m{{1, 2, 3, 4}, {2, 4, 6, 9}};
  const auto basis = integer_nullspace(m);
  ASSERT_EQ(basis.size(), 2u);
  for (const auto& v : basis) {
    EXPECT_TRUE((m * v).is_zero());
    EXPECT_EQ(content(v), 1);
  }
}

TEST(Lattice, SolveRational) {
  RationalMatrix a{{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}};
  auto x = solve_rational(a, {Rational(3), Rational(0)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], Rational(3, 2));
  RationalMatrix b{{Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
  EXPECT_FALSE(solve_rational(b, {Rational(1), Rational(3)}));
}

TEST(Lattice, AffineMapRejectsNonUnimodular) {
  EXPECT_TORIC_ERROR(AffineUnimodularMap(IntegerMatrix{{2, 0}, {0, 1}}, LatticeVector(2)), ErrorCode::kPrecondition);
  EXPECT_TORIC_ERROR(AffineUnimodularMap(IntegerMatrix::identity(2), LatticeVector(3)), ErrorCode::kDimension);
}

TEST(Lattice, ComposeAndInverse) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_affine_unimodular(3, rng);
    const auto g = random_affine_unimodular(3, rng);
    const LatticeVector x{1, -2, 5};
    EXPECT_EQ(f.compose(g).apply(x), f.apply(g.apply(x)));
    EXPECT_EQ(f.inverse().apply(f.apply(x)), x);
    EXPECT_EQ(f.compose(f.inverse()), AffineUnimodularMap::identity(3));
  }
}

TEST(Lattice, FrameSolverRecoversRandomMaps) {
  std::mt19937_64 rng(23);
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<LatticeVector> simplex{LatticeVector(n)};
    for (std::size_t i = 0; i < n; ++i) simplex.push_back(LatticeVector::unit(n, i));
    const std::vector<LatticeVector> src = random_affine_unimodular(n, rng).apply(simplex);
    const AffineFrameSolver solver(src);
    for (int trial = 0; trial < 20; ++trial) {
      const auto m = random_affine_unimodular(n, rng);
      auto solved = solver.solve(m.apply(src));
      ASSERT_TRUE(solved);
      EXPECT_EQ(*solved, m);
    }
  }
}

TEST(Lattice, FrameSolverRejectsNonUnimodularTargets) {
  const std::vector<LatticeVector> src{{0, 0}, {1, 0}, {0, 1}};
  EXPECT_FALSE(solve_affine_frame(src, {{0, 0}, {2, 0}, {0, 1}}));
  EXPECT_TRUE(solve_affine_frame(src, {{1, 1}, {1, 2}, {2, 1}}));
  EXPECT_TORIC_ERROR(solve_affine_frame({{0, 0}, {1, 1}, {2, 2}}, src), ErrorCode::kPrecondition);
}

TEST(Lattice, RandomMapsPreserveVertexCount) {
  std::mt19937_64 rng(29);
  const std::vector<LatticeVector> pts{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int trial = 0; trial < 10; ++trial) EXPECT_EQ(image_set(random_affine_unimodular(3, rng), pts).size(), 4u);
}

}  // namespace
}  // namespace toric
