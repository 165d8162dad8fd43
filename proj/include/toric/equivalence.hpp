#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

struct EquivalenceWitness {
  bool equivalent = false;
  /// Sends the vertex set of the first polytope onto that of the second.
  std::optional<AffineUnimodularMap> map;
  /// For classification procedures: the first check that failed, empty on success.
  std::string failed_step;
};

/// Complete search over facet frames. A fixed facet of d1 (plus one vertex off it) is matched
/// against every facet of d2 with compatible vertex invariants; each labeling yields at most
/// one candidate map, accepted iff it bijects the vertex sets. Mixed dimensions throw kDimension.
EquivalenceWitness unimodular_equivalent(const LatticePolytope& d1, const LatticePolytope& d2);

/// True iff `map` sends the vertices of `from` bijectively onto the vertices of `to`.
bool verify_witness(const LatticePolytope& from, const LatticePolytope& to, const AffineUnimodularMap& map);

/// Lexicographically least sorted vertex list over all normalizations that send an ordered
/// facet to the standard simplex in x_n = 0 and reduce a nearest off-facet vertex modulo its
/// height. Requires a toric diagram (kPrecondition).
std::vector<LatticeVector> canonical_form(const LatticePolytope& d);

/// h*-vector equality; kDimension on mixed dimensions.
bool ehrhart_equivalent(const LatticePolytope& d1, const LatticePolytope& d2);

struct FamilyIdentification {
  long k = 0;
  /// Sends the input onto family_Dk(n, k).
  AffineUnimodularMap map;
};

/// Identifies a toric diagram with h* = (1, ..., 1, 0) as some D_k. Wrong h* or lattice point
/// count throws kNotInFamily; a degenerate affine dependency throws kInternal.
FamilyIdentification identify_Dk(const LatticePolytope& s);

/// Runs the constructive recognition of the small cross-polytope. On failure `failed_step`
/// is one of hstar, lattice_points_t1, lattice_points_t2, edge_count, gorenstein_index,
/// antipodal_pairing, frame_normalization.
EquivalenceWitness is_small_cross(const LatticePolytope& s);

}  // namespace toric
