#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "test_util.hpp"
#include "toric/cactus.hpp"
#include "toric/constructions.hpp"
#include "toric/ehrhart.hpp"
#include "toric/equivalence.hpp"

namespace toric {
namespace {

// Flat cactus: vertex v has the triangles tri[v], each a pair of child vertex ids.
struct FlatCactus {
  std::vector<std::vector<std::pair<int, int>>> tri{{}};
};

std::string flat_code(const FlatCactus& c, int v) {
  std::vector<std::string> parts;
  for (auto [a, b] : c.tri[static_cast<std::size_t>(v)]) {
    std::string x = flat_code(c, a), y = flat_code(c, b);
    if (y < x) std::swap(x, y);
    parts.push_back("[" + x + y + "]");
  }
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  return out + ")";
}

// Every attachment sequence of n triangles, reduced to its set of codes.
std::set<std::string> brute_force_codes(std::size_t n) {
  std::set<std::string> out;
  std::function<void(FlatCactus&, std::size_t)> grow = [&](FlatCactus& c, std::size_t left) {
    if (left == 0) {
      out.insert(flat_code(c, 0));
      return;
    }
    const int size = static_cast<int>(c.tri.size());
    for (int v = 0; v < size; ++v) {
      c.tri.emplace_back();
      c.tri.emplace_back();
      c.tri[static_cast<std::size_t>(v)].emplace_back(size, size + 1);
      grow(c, left - 1);
      c.tri[static_cast<std::size_t>(v)].pop_back();
      c.tri.pop_back();
      c.tri.pop_back();
    }
  };
  FlatCactus c;
  grow(c, n);
  return out;
}

TEST(Cactus, CodesAndSymmetry) {
  EXPECT_EQ(canonical_code(star_cactus(1)), "([()()])");
  EXPECT_EQ(canonical_code(star_cactus(2)), "([()()][()()])");
  const CactusNode leaf;
  CactusNode one;
  one.triangles.push_back({leaf, star_cactus(1)});
  CactusNode swapped;
  swapped.triangles.push_back({star_cactus(1), leaf});
  EXPECT_EQ(canonical_code(one), canonical_code(swapped));
  EXPECT_EQ(canonical_code(one), "([()([()()])])");
  EXPECT_EQ(canonical_code(chain_cactus(2)), canonical_code(one));
  EXPECT_EQ(triangle_count(chain_cactus(5)), 5u);
  EXPECT_EQ(triangle_count(leaf), 0u);
}

TEST(Cactus, EnumerationMatchesBruteForce) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::string> codes;
    for (const auto& c : enumerate_cacti(n)) {
      EXPECT_EQ(triangle_count(c), n);
      codes.insert(canonical_code(c));
    }
    EXPECT_EQ(codes, brute_force_codes(n)) << "n=" << n;
  }
}

TEST(Cactus, KnownCounts) {
  const std::vector<long> known{1, 2, 5, 13, 37, 111, 345, 1105, 3624, 12099, 41000, 140647, 487440, 1704115, 6002600};
  for (std::size_t n = 1; n <= known.size(); ++n) EXPECT_EQ(count_cacti(n), known[n - 1]) << "n=" << n;
  for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(Integer(static_cast<long>(enumerate_cacti(n).size())), count_cacti(n));
}

TEST(Cactus, EnumerationSortedAndDistinct) {
  const auto all = enumerate_cacti(7);
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(canonical_code(all[i - 1]), canonical_code(all[i]));
  EXPECT_TORIC_ERROR(enumerate_cacti(0), ErrorCode::kPrecondition);
}

TEST(Cactus, StarRealizesCrossPolytope) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(realize(star_cactus(n)), cross_polytope(n));
}

TEST(Cactus, ChainRealization) {
  const std::vector<LatticeVector> pts = realization_points(chain_cactus(2));
  EXPECT_EQ(pts, (std::vector<LatticeVector>{{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {-1, -1}}));
  const LatticePolytope expected = LatticePolytope::hull({{1, 0}, {-1, 0}, {0, 1}, {1, -1}});
  EXPECT_TRUE(unimodular_equivalent(realize(chain_cactus(2)), expected).equivalent);
}

TEST(Cactus, RealizationsAreToricWithCrossHStar) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& c : enumerate_cacti(n)) {
      const LatticePolytope d = realize(c);
      EXPECT_TRUE(is_toric_diagram(d));
      EXPECT_EQ(ehrhart(d).hstar(), HStarVector::binomial_row(n, n));
    }
}

TEST(Cactus, RoundTripThroughRandomImages) {
  std::mt19937_64 rng(307);
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& c : enumerate_cacti(n)) {
      EXPECT_EQ(canonical_code(extract_cactus(realize(c))), canonical_code(c));
      const LatticePolytope moved = transform(realize(c), random_affine_unimodular(n, rng));
      EXPECT_EQ(canonical_code(extract_cactus(moved)), canonical_code(c));
    }
}

TEST(Cactus, BreadthFirstIsEquivalentToDepthFirst) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& c : enumerate_cacti(n)) {
      const auto w = unimodular_equivalent(realize(c, Extension::kDepthFirst), realize(c, Extension::kBreadthFirst));
      EXPECT_TRUE(w.equivalent) << canonical_code(c);
    }
}

TEST(Cactus, ExtractionRejectsOtherDiagrams) {
  EXPECT_TORIC_ERROR(extract_cactus(small_cross_polytope(3)), ErrorCode::kDomain);
  EXPECT_TORIC_ERROR(extract_cactus(cube(2, -1, 1)), ErrorCode::kDomain);
  EXPECT_TORIC_ERROR(extract_cactus(family_Tk(3, 1)), ErrorCode::kDomain);
}

TEST(Cactus, CanonicalizeSortsChildren) {
  CactusNode c;
  c.triangles.push_back({star_cactus(1), CactusNode{}});
  c.triangles.push_back({CactusNode{}, CactusNode{}});
  const CactusNode k = canonicalize(c);
  EXPECT_EQ(canonical_code(k.triangles[0].first), "()");
  EXPECT_EQ(k.triangles[0].second.triangles.size(), 0u);
  EXPECT_EQ(k.triangles[1].second.triangles.size(), 1u);
}

}  // namespace
}  // namespace toric
