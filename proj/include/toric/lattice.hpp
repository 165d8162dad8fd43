#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "toric/arith.hpp"

namespace toric {

/// Exact integer vector. Ordering is lexicographic.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t dim) : coords_(dim) {}
  LatticeVector(std::initializer_list<long> coords);
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}

  static LatticeVector unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return coords_.size(); }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;
  /// Copy with one more coordinate appended.
  LatticeVector extended(const Integer& last) const;
  /// First `k` coordinates.
  LatticeVector prefix(std::size_t k) const;

  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);
  LatticeVector& operator*=(const Integer& scalar);

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Integer> coords_;
};

LatticeVector operator+(LatticeVector a, const LatticeVector& b);
LatticeVector operator-(LatticeVector a, const LatticeVector& b);
LatticeVector operator-(LatticeVector a);
LatticeVector operator*(const Integer& s, LatticeVector a);
Integer dot(const LatticeVector& a, const LatticeVector& b);
std::string to_string(const LatticeVector& v);

/// Exact rational vector; every entry kept in lowest terms.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t dim) : coords_(dim) {}
  explicit RationalVector(std::vector<Rational> coords);
  explicit RationalVector(const LatticeVector& v);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_integral() const;
  /// Throws kPrecondition unless integral.
  LatticeVector to_lattice() const;
  /// Least common multiple of the denominators.
  Integer denominator_lcm() const;

  friend bool operator==(const RationalVector& a, const RationalVector& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const RationalVector& a, const RationalVector& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Rational> coords_;
};

/// Dense row-major integer matrix.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<LatticeVector>& rows);
  static IntegerMatrix from_columns(const std::vector<LatticeVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Integer>& entries() const { return entries_; }

  LatticeVector row(std::size_t r) const;
  LatticeVector column(std::size_t c) const;
  IntegerMatrix transposed() const;

  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
LatticeVector operator*(const IntegerMatrix& a, const LatticeVector& v);

/// Fraction-free (Bareiss) determinant. Throws kDimension for non-square input.
Integer determinant(const IntegerMatrix& m);

/// Divide by the positive gcd of the entries. Throws kDegenerateInput on the zero vector.
LatticeVector primitive(const LatticeVector& v);
Integer content(const LatticeVector& v);

/// Some x with a·x = gcd(a). Throws kDegenerateInput on the zero vector.
LatticeVector bezout_vector(const LatticeVector& a);

/// Unimodular matrix whose last row is the primitive vector c. Throws kPrecondition otherwise.
IntegerMatrix hermite_completion(const LatticeVector& c);

/// Exact inverse of a unimodular matrix; throws kPrecondition when |det| != 1.
IntegerMatrix inverse_unimodular(const IntegerMatrix& m);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);
std::size_t rank(const IntegerMatrix& m);
std::size_t rank(const std::vector<LatticeVector>& rows);

/// Basis of the rational kernel {x : m x = 0}, each scaled to a primitive integer vector.
std::vector<LatticeVector> integer_nullspace(const IntegerMatrix& m);

/// One rational solution of a x = b (free variables set to zero), or none if inconsistent.
std::optional<std::vector<Rational>> solve_rational(const RationalMatrix& a, const std::vector<Rational>& b);

/// x ↦ linear·x + translation with |det(linear)| = 1.
class AffineUnimodularMap {
 public:
  AffineUnimodularMap() = default;
  /// Throws kPrecondition when the linear part is not unimodular or sizes disagree.
  AffineUnimodularMap(IntegerMatrix linear, LatticeVector translation);

  static AffineUnimodularMap identity(std::size_t n);

  std::size_t dim() const { return linear_.rows(); }
  const IntegerMatrix& linear() const { return linear_; }
  const LatticeVector& translation() const { return translation_; }

  LatticeVector apply(const LatticeVector& x) const;
  std::vector<LatticeVector> apply(const std::vector<LatticeVector>& xs) const;
  /// (this ∘ other)(x) = this(other(x)).
  AffineUnimodularMap compose(const AffineUnimodularMap& other) const;
  AffineUnimodularMap inverse() const;

  friend bool operator==(const AffineUnimodularMap& a, const AffineUnimodularMap& b) {
    return a.linear_ == b.linear_ && a.translation_ == b.translation_;
  }

 private:
  IntegerMatrix linear_;
  LatticeVector translation_;
};

/// Unique affine map with src[i] ↦ dst[i] if its linear part is unimodular, else none.
/// Requires n+1 affinely independent source points (kPrecondition otherwise).
std::optional<AffineUnimodularMap> solve_affine_frame(const std::vector<LatticeVector>& src,
                                                      const std::vector<LatticeVector>& dst);

/// Precomputed inverse of a fixed source frame, for repeated solves against many targets.
class AffineFrameSolver {
 public:
  explicit AffineFrameSolver(const std::vector<LatticeVector>& src);
  std::optional<AffineUnimodularMap> solve(const std::vector<LatticeVector>& dst) const;

 private:
  std::size_t n_ = 0;
  LatticeVector origin_;
  IntegerMatrix adjugate_;  // adj(S) with S = [src_i - src_0]
  Integer det_;
};

/// Random affine unimodular map built from `steps` elementary operations, a signed
/// permutation, and a translation with entries in [-shift, shift].
AffineUnimodularMap random_affine_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 6, int shift = 3);

}  // namespace toric
