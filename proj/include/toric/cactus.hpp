#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

struct CactusTriangle;

/// A vertex of a rooted 3-cactus together with the triangles hanging below it.
struct CactusNode {
  std::vector<CactusTriangle> triangles;
};

/// A triangle attached to its parent vertex; the two other corners are child nodes.
struct CactusTriangle {
  CactusNode first;
  CactusNode second;
};

using RootedCactus = CactusNode;

/// Total number of triangles below (and including) the node.
std::size_t triangle_count(const CactusNode& c);

/// node = "(" + sorted triangle codes + ")", triangle = "[" + sorted child codes + "]".
/// Equal codes exactly for root-preserving isomorphic cacti.
std::string canonical_code(const CactusNode& c);

/// Copy with every triangle list and child pair sorted by code.
CactusNode canonicalize(const CactusNode& c);

/// All triangles attached to the root.
CactusNode star_cactus(std::size_t n);
/// A path of n triangles, each hanging from a corner of the previous one.
CactusNode chain_cactus(std::size_t n);

/// One canonical representative per isomorphism class with n triangles, sorted by code.
/// Requires n >= 1.
std::vector<RootedCactus> enumerate_cacti(std::size_t n);

/// Number of classes with n triangles, from the multiset-composition recurrence.
Integer count_cacti(std::size_t n);

enum class Extension {
  /// Pre-order over code-ordered children.
  kDepthFirst,
  /// Level by level, code-ordered within a level.
  kBreadthFirst,
};

/// Lattice points assigned to the cactus vertices in the order they are created,
/// starting with the origin for the root.
std::vector<LatticeVector> realization_points(const RootedCactus& c, Extension order = Extension::kDepthFirst);

/// Step k attaches e_k and y - e_k below the vertex sitting at y; the first child in code
/// order receives e_k. The result is the convex hull of all created points.
LatticePolytope realize(const RootedCactus& c, Extension order = Extension::kDepthFirst);

/// Recovers the cactus from the additive triples a + b = c among the lattice points, with c
/// the parent and the interior lattice point as root. Inputs outside the class (wrong
/// lattice point count, h*, or triangle structure) throw kDomain.
RootedCactus extract_cactus(const LatticePolytope& d);

}  // namespace toric
