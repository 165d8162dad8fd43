#pragma once

#include <cstddef>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

/// [lo, hi]^n. Requires n >= 1 and lo < hi.
LatticePolytope cube(std::size_t n, long lo, long hi);
/// conv(±e_i).
LatticePolytope cross_polytope(std::size_t n);
/// conv(0, e_n, e_i, e_n - e_i : i < n).
LatticePolytope small_cross_polytope(std::size_t n);
/// conv(0, e_1, ..., e_n).
LatticePolytope standard_simplex(std::size_t n);

/// conv(P × {0} ∪ {e_{n+1}}).
LatticePolytope pyramid(const LatticePolytope& p);

/// conv({(s1, 1), (s2, -1)} ∪ P × {0}). s1 and s2 must be lattice points of P
/// (kPrecondition). With require_toric, s1 and s2 lying on a common facet is a kValidity error.
LatticePolytope pseudo_bipyramid(const LatticePolytope& p, const LatticeVector& s1, const LatticeVector& s2,
                                 bool require_toric = false);

struct PrequantizationResult {
  LatticePolytope diagram;
  /// Linear map T of R^{n+1} sending every (ν_i, λ_i) to height 1.
  AffineUnimodularMap transform;
  /// Primitive c with c·(ν_i, λ_i) = 1; its last entry is the Gorenstein index.
  LatticeVector c;
  int index = 0;
};

/// Prequantization of a Delzant lattice polytope given by its facet system. The system must
/// be irredundant with primitive normals (kPrecondition). No integral c gives kNotGorenstein.
PrequantizationResult prequantize(const HalfspaceSystem& system);
PrequantizationResult prequantize(const LatticePolytope& p);

struct FamilyParams {
  std::size_t n = 0;
  long k = 0;
};

/// kPrecondition naming the violated constraint: n >= 2, 0 <= k < n, and for the half
/// dilate and D_k also k ≡ n (mod 2).
void validate_family(const FamilyParams& params, bool need_parity);

LatticePolytope family_Pk(std::size_t n, long k);
/// (P_k + (1, ..., 1)) / 2, integral exactly when k ≡ n (mod 2).
LatticePolytope family_Pk_half(std::size_t n, long k);
LatticePolytope family_Tk(std::size_t n, long k);
LatticePolytope family_Dk(std::size_t n, long k);
/// The vertices a_1, ..., a_{n+2} of D_k in their defining order.
std::vector<LatticeVector> family_Dk_vertices(std::size_t n, long k);

/// Lower-triangular integer matrix with -1 on the diagonal.
class BottMatrix {
 public:
  BottMatrix() = default;
  /// Strictly lower entries a_{i,j} (i > j), listed row by row.
  BottMatrix(std::size_t n, const std::vector<long>& strictly_lower);
  /// Throws kPrecondition unless lower triangular with -1 diagonal.
  static BottMatrix from_full(const IntegerMatrix& m);

  std::size_t dim() const { return n_; }
  /// 0-based entry; diagonal -1, zero above.
  const Integer& operator()(std::size_t i, std::size_t j) const { return full_(i, j); }
  const IntegerMatrix& full() const { return full_; }

 private:
  std::size_t n_ = 0;
  IntegerMatrix full_;
};

bool is_monotone_bott(const BottMatrix& l);
/// {x : x·ν + 1 >= 0} over ν = e_i and the columns of L.
HalfspaceSystem bott_moment_system(const BottMatrix& l);
LatticePolytope bott_moment_polytope(const BottMatrix& l);
/// conv of the 2n normals; kValidity unless monotone.
LatticePolytope bott_diagram(const BottMatrix& l);
/// The five monotone Bott matrices in dimension 3.
std::vector<BottMatrix> monotone_bott_examples();

}  // namespace toric
