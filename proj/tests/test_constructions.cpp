#include <gtest/gtest.h>

#include <set>

#include "test_util.hpp"
#include "toric/constructions.hpp"
#include "toric/ehrhart.hpp"
#include "toric/equivalence.hpp"

namespace toric {
namespace {

std::set<LatticeVector> vertex_set(const LatticePolytope& p) { return {p.vertices().begin(), p.vertices().end()}; }

HStarVector ones_then_zero(std::size_t n) {
  std::vector<Integer> h(n + 1, 1);
  h[n] = 0;
  return HStarVector(h);
}

TEST(Constructions, BasicVertexLists) {
  EXPECT_EQ(vertex_set(cube(2, -1, 2)), (std::set<LatticeVector>{{-1, -1}, {-1, 2}, {2, -1}, {2, 2}}));
  EXPECT_EQ(vertex_set(cross_polytope(2)), (std::set<LatticeVector>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  EXPECT_EQ(vertex_set(small_cross_polytope(2)), (std::set<LatticeVector>{{0, 0}, {0, 1}, {1, 0}, {-1, 1}}));
  EXPECT_EQ(vertex_set(small_cross_polytope(3)),
            (std::set<LatticeVector>{{0, 0, 0}, {0, 0, 1}, {1, 0, 0}, {-1, 0, 1}, {0, 1, 0}, {0, -1, 1}}));
  EXPECT_EQ(standard_simplex(4).num_vertices(), 5u);
  EXPECT_TORIC_ERROR(cube(2, 1, 1), ErrorCode::kPrecondition);
  EXPECT_TORIC_ERROR(cross_polytope(0), ErrorCode::kPrecondition);
}

TEST(Constructions, SmallCrossHasTwoNPoints) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const LatticePolytope s = small_cross_polytope(n);
    EXPECT_EQ(s.num_vertices(), 2 * n);
    EXPECT_EQ(ehrhart(s).hstar(), HStarVector::binomial_row(n, n - 1));
  }
}

TEST(Constructions, PyramidKeepsHStar) {
  const LatticePolytope py = pyramid(cube(2, 0, 1));
  EXPECT_EQ(py.dim(), 3u);
  EXPECT_EQ(py.num_vertices(), 5u);
  EXPECT_EQ(ehrhart(py).hstar(), (HStarVector{1, 1, 0, 0}));
  EXPECT_EQ(ehrhart(pyramid(cross_polytope(3))).hstar(), (HStarVector{1, 3, 3, 1, 0}));
}

TEST(Constructions, PseudoBipyramid) {
  const LatticePolytope base = cross_polytope(2);
  const LatticePolytope b = pseudo_bipyramid(base, {0, 0}, {0, 0});
  EXPECT_EQ(b, cross_polytope(3));
  EXPECT_TORIC_ERROR(pseudo_bipyramid(base, {2, 0}, {0, 0}), ErrorCode::kPrecondition);
  EXPECT_TORIC_ERROR(pseudo_bipyramid(base, {1, 0}, {0, 1}, true), ErrorCode::kValidity);
  EXPECT_NO_THROW(pseudo_bipyramid(base, {1, 0}, {-1, 0}, true));
  EXPECT_TORIC_ERROR(pseudo_bipyramid(base, {1, 0, 0}, {0, 0}), ErrorCode::kDimension);
}

TEST(Constructions, PrequantizeCubes) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const PrequantizationResult sym = prequantize(cube(n, -1, 1));
    EXPECT_EQ(sym.c, LatticeVector::unit(n + 1, n));
    EXPECT_EQ(sym.index, 1);
    EXPECT_TRUE(unimodular_equivalent(sym.diagram, cross_polytope(n)).equivalent);

    const PrequantizationResult unit = prequantize(cube(n, 0, 1));
    LatticeVector expected(n + 1);
    for (std::size_t i = 0; i < n; ++i) expected[i] = 1;
    expected[n] = 2;
    EXPECT_EQ(unit.c, expected);
    EXPECT_EQ(unit.index, 2);
    EXPECT_TRUE(unimodular_equivalent(unit.diagram, small_cross_polytope(n)).equivalent);
  }
}

TEST(Constructions, PrequantizeTransformSendsNormalsToHeightOne) {
  const LatticePolytope p = family_Pk(4, 1);
  const PrequantizationResult r = prequantize(p);
  for (const auto& h : p.facets()) {
    const LatticeVector img = r.transform.apply(h.normal.extended(h.offset));
    EXPECT_EQ(img[4], 1);
    EXPECT_TRUE(r.diagram.vertex_index(img.prefix(4)).has_value());
  }
  EXPECT_EQ(dot(r.c, LatticeVector::unit(5, 4)), r.index);
}

TEST(Constructions, PrequantizeRejections) {
  EXPECT_TORIC_ERROR(prequantize(cube(2, 0, 3)), ErrorCode::kNotGorenstein);
  HalfspaceSystem rect{2, {{{1, 0}, 0}, {{-1, 0}, 2}, {{0, 1}, 0}, {{0, -1}, 1}}};
  EXPECT_TORIC_ERROR(prequantize(rect), ErrorCode::kNotGorenstein);

  const LatticePolytope tri = LatticePolytope::hull({{0, 0}, {2, 0}, {0, 1}});
  EXPECT_TORIC_ERROR(prequantize(tri), ErrorCode::kPrecondition);

  HalfspaceSystem redundant = cube(2, 0, 1).facets();
  redundant.halfspaces.push_back({{1, 0}, 5});
  EXPECT_TORIC_ERROR(prequantize(redundant), ErrorCode::kPrecondition);

  HalfspaceSystem scaled{1, {{{2}, 0}, {{-1}, 1}}};
  EXPECT_TORIC_ERROR(prequantize(scaled), ErrorCode::kPrecondition);
}

TEST(Constructions, FamilyParameterValidation) {
  EXPECT_TORIC_ERROR(family_Pk(1, 0), ErrorCode::kPrecondition);
  EXPECT_TORIC_ERROR(family_Pk(3, 3), ErrorCode::kPrecondition);
  EXPECT_TORIC_ERROR(family_Tk(3, -1), ErrorCode::kPrecondition);
  EXPECT_TORIC_ERROR(family_Dk(3, 0), ErrorCode::kPrecondition);
  EXPECT_TORIC_ERROR(family_Pk_half(4, 1), ErrorCode::kPrecondition);
  try {
    validate_family({4, 1}, true);
    FAIL();
  } catch (const ToricError& e) {
    EXPECT_NE(std::string(e.what()).find("mod 2"), std::string::npos);
  }
  EXPECT_NO_THROW(validate_family({4, 2}, true));
}

TEST(Constructions, PkShape) {
  for (std::size_t n = 2; n <= 5; ++n)
    for (long k = 0; k < static_cast<long>(n); ++k) {
      const LatticePolytope p = family_Pk(n, k);
      EXPECT_EQ(p.num_vertices(), 2 * n);
      EXPECT_EQ(p.facets().size(), n + 2);
      EXPECT_TRUE(is_delzant(p));
    }
}

TEST(Constructions, TkAndDkHStar) {
  for (std::size_t n = 2; n <= 5; ++n)
    for (long k = 0; k < static_cast<long>(n); ++k) {
      std::vector<Integer> expected(n + 1, 2);
      expected.front() = 1;
      expected.back() = 1;
      const LatticePolytope t = family_Tk(n, k);
      EXPECT_TRUE(is_toric_diagram(t));
      EXPECT_EQ(ehrhart(t).hstar(), HStarVector(expected));
      if ((static_cast<long>(n) - k) % 2 == 0) {
        const LatticePolytope d = family_Dk(n, k);
        EXPECT_TRUE(is_toric_diagram(d));
        EXPECT_EQ(d.num_vertices(), n + 2);
        EXPECT_EQ(ehrhart(d).hstar(), ones_then_zero(n));
      }
    }
}

TEST(Constructions, PrequantizedFamilies) {
  for (std::size_t n = 2; n <= 4; ++n)
    for (long k = 0; k < static_cast<long>(n); ++k) {
      const PrequantizationResult r = prequantize(family_Pk(n, k));
      EXPECT_EQ(r.index, 1);
      EXPECT_TRUE(unimodular_equivalent(r.diagram, family_Tk(n, k)).equivalent) << n << "," << k;
      if ((static_cast<long>(n) - k) % 2 == 0) {
        const PrequantizationResult h = prequantize(family_Pk_half(n, k));
        EXPECT_EQ(h.index, 2);
        EXPECT_TRUE(unimodular_equivalent(h.diagram, family_Dk(n, k)).equivalent) << n << "," << k;
      }
    }
}

TEST(Constructions, PkHalfIsIntegralHalving) {
  const LatticePolytope p = family_Pk(4, 2);
  const LatticePolytope h = family_Pk_half(4, 2);
  std::set<LatticeVector> expected;
  for (const auto& v : p.vertices()) {
    LatticeVector w = v + LatticeVector{1, 1, 1, 1};
    for (std::size_t i = 0; i < 4; ++i) {
      EXPECT_EQ(w[i] % 2, 0);
      w[i] /= 2;
    }
    expected.insert(w);
  }
  EXPECT_EQ(vertex_set(h), expected);
}

TEST(Constructions, BottMatrices) {
  const BottMatrix l(3, {1, 0, 1});
  EXPECT_EQ(l(0, 0), -1);
  EXPECT_EQ(l(1, 0), 1);
  EXPECT_EQ(l(2, 1), 1);
  EXPECT_EQ(l(0, 2), 0);
  EXPECT_EQ(BottMatrix::from_full(l.full()).full(), l.full());
  EXPECT_TORIC_ERROR(BottMatrix(3, {1, 2}), ErrorCode::kDimension);
  EXPECT_TORIC_ERROR(BottMatrix::from_full(IntegerMatrix{{1, 0}, {0, -1}}), ErrorCode::kPrecondition);
  EXPECT_TORIC_ERROR(BottMatrix::from_full(IntegerMatrix{{-1, 1}, {0, -1}}), ErrorCode::kPrecondition);

  const BottMatrix bad(2, {2});
  EXPECT_FALSE(is_monotone_bott(bad));
  EXPECT_TORIC_ERROR(bott_diagram(bad), ErrorCode::kValidity);
  EXPECT_TRUE(is_monotone_bott(BottMatrix(2, {-1})));
  EXPECT_TRUE(is_monotone_bott(BottMatrix(2, {1})));
}

TEST(Constructions, MonotoneBottExamples) {
  const auto examples = monotone_bott_examples();
  ASSERT_EQ(examples.size(), 5u);
  for (const auto& l : examples) {
    EXPECT_TRUE(is_monotone_bott(l));
    const LatticePolytope moment = bott_moment_polytope(l);
    EXPECT_TRUE(is_delzant(moment));
    EXPECT_EQ(moment.facets().size(), 6u);
    const LatticePolytope diagram = bott_diagram(l);
    EXPECT_TRUE(is_toric_diagram(diagram));
    const PrequantizationResult r = prequantize(bott_moment_system(l));
    EXPECT_TRUE(unimodular_equivalent(r.diagram, diagram).equivalent);
  }
}

}  // namespace
}  // namespace toric
