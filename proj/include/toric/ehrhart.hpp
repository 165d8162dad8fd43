#pragma once

#include <cstddef>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

/// Coefficients h*_0..h*_n of the Ehrhart series numerator of an n-polytope.
class HStarVector {
 public:
  HStarVector() = default;
  explicit HStarVector(std::vector<Integer> coeffs);
  HStarVector(std::initializer_list<long> coeffs);

  /// (C(m,0), ..., C(m,n)) padded with zeros to length n+1.
  static HStarVector binomial_row(std::size_t n, unsigned long m);

  std::size_t dim() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// h*_k, or 0 outside 0..n.
  Integer at(long k) const;
  /// Index of the highest nonzero coefficient (-1 for the zero vector).
  long degree() const;
  /// Normalized volume.
  Integer sum() const;

  friend bool operator==(const HStarVector& a, const HStarVector& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Integer> coeffs_;
};

/// L(t) = Σ_k h*_k C(t+n-k, n), kept in the binomial basis.
class EhrhartPolynomial {
 public:
  EhrhartPolynomial() = default;
  explicit EhrhartPolynomial(HStarVector hstar) : hstar_(std::move(hstar)) {}

  const HStarVector& hstar() const { return hstar_; }
  std::size_t dim() const { return hstar_.dim(); }
  /// Evaluates the polynomial; meaningful for every integer t, including negative ones.
  Integer evaluate(const Integer& t) const;
  Integer evaluate(long t) const { return evaluate(Integer(t)); }
  /// L_{P°}(t) = (-1)^n L(-t).
  Integer evaluate_interior(long t) const;
  /// Monomial coefficients c_0..c_n of L(t).
  std::vector<Rational> monomial_coefficients() const;

 private:
  HStarVector hstar_;
};

/// cb_{2k} for k = 0..n followed by a constant tail.
struct BettiSequence {
  std::vector<Integer> values;
  Integer tail;

  /// cb_{2k}; 0 for k < 0 and the tail for k > n.
  Integer at(long k) const;
};

Integer count_points(const LatticePolytope& p, long t);
Integer count_interior(const LatticePolytope& p, long t);
Integer count_boundary(const LatticePolytope& p, long t);

/// Counts t = 0..n, solves the binomial-basis system, then re-counts t = n+1, n+2 as a
/// self-check. A mismatch or a negative coefficient throws kInternal.
EhrhartPolynomial ehrhart(const LatticePolytope& p);

bool hibi_palindromic(const HStarVector& h);
/// h*_k = h*_{n+1-r-k} for 0 <= k <= n+1-r and h*_k = 0 above that degree.
bool gorenstein_palindromic(const HStarVector& h, int r);
BettiSequence contact_betti(const HStarVector& h);
/// hD(z) == (1 + z^s + ... + z^{s(r-1)})·hD2(z).
bool series_product_check(const HStarVector& hd, const HStarVector& hd2, int r, int s);
/// Σ_{k>=0} h*_{i-rk-r+1}(D).
Integer betti_from_quotient(const HStarVector& hd, int r, long i);

}  // namespace toric
