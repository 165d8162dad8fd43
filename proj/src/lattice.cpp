#include "toric/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "toric/errors.hpp"

namespace toric {

// ---------------------------------------------------------------- vectors

LatticeVector::LatticeVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

LatticeVector LatticeVector::unit(std::size_t dim, std::size_t i) {
  LatticeVector v(dim);
  v[i] = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x == 0; });
}

LatticeVector LatticeVector::extended(const Integer& last) const {
  LatticeVector out = *this;
  out.coords_.push_back(last);
  return out;
}

LatticeVector LatticeVector::prefix(std::size_t k) const {
  return LatticeVector(std::vector<Integer>(coords_.begin(), coords_.begin() + static_cast<long>(k)));
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  if (other.dim() != dim()) fail(ErrorCode::kDimension, "vector dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  if (other.dim() != dim()) fail(ErrorCode::kDimension, "vector dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Integer& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
LatticeVector operator-(LatticeVector a) { return a *= Integer(-1); }
LatticeVector operator*(const Integer& s, LatticeVector a) { return a *= s; }

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::kDimension, "dot product dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const LatticeVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

RationalVector::RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {
  for (auto& c : coords_) c.canonicalize();
}

RationalVector::RationalVector(const LatticeVector& v) {
  coords_.reserve(v.dim());
  for (const auto& c : v) coords_.emplace_back(c);
}

bool RationalVector::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x.get_den() == 1; });
}

LatticeVector RationalVector::to_lattice() const {
  if (!is_integral()) fail(ErrorCode::kPrecondition, "rational vector is not integral");
  std::vector<Integer> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.get_num());
  return LatticeVector(std::move(out));
}

Integer RationalVector::denominator_lcm() const {
  Integer l = 1;
  for (const auto& c : coords_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

// ---------------------------------------------------------------- matrices

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorCode::kDimension, "ragged matrix literal");
    for (long x : r) entries_.emplace_back(x);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<LatticeVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].dim();
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != cols) fail(ErrorCode::kDimension, "ragged row list");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(const std::vector<LatticeVector>& cols) {
  return from_rows(cols).transposed();
}

LatticeVector IntegerMatrix::row(std::size_t r) const {
  return LatticeVector(std::vector<Integer>(entries_.begin() + static_cast<long>(r * cols_),
                                            entries_.begin() + static_cast<long>((r + 1) * cols_)));
}

LatticeVector IntegerMatrix::column(std::size_t c) const {
  LatticeVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::kDimension, "matrix product dimension mismatch");
  IntegerMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

LatticeVector operator*(const IntegerMatrix& a, const LatticeVector& v) {
  if (a.cols() != v.dim()) fail(ErrorCode::kDimension, "matrix-vector dimension mismatch");
  LatticeVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return out;
}

Integer determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::kDimension, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Integer content(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

LatticeVector primitive(const LatticeVector& v) {
  const Integer g = content(v);
  if (g == 0) fail(ErrorCode::kDegenerateInput, "primitive() of the zero vector");
  LatticeVector out = v;
  for (std::size_t i = 0; i < out.dim(); ++i) mpz_divexact(out[i].get_mpz_t(), out[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

LatticeVector bezout_vector(const LatticeVector& a) {
  const std::size_t n = a.dim();
  LatticeVector x(n);
  Integer g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    Integer g2, s, t;
    mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), a[i].get_mpz_t());
    x *= s;
    x[i] += t;
    g = g2;
  }
  if (g == 0) fail(ErrorCode::kDegenerateInput, "bezout_vector() of the zero vector");
  return x;
}

IntegerMatrix hermite_completion(const LatticeVector& c) {
  const std::size_t m = c.dim();
  if (m == 0 || content(c) != 1) fail(ErrorCode::kPrecondition, "hermite_completion needs a primitive vector");

  // Fast path: a unit entry c_j lets the remaining unit rows complete c directly.
  for (std::size_t j = 0; j < m; ++j) {
    if (c[j] == 1 || c[j] == -1) {
      IntegerMatrix out(m, m);
      std::size_t r = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == j) continue;
        out(r++, i) = 1;
      }
      for (std::size_t i = 0; i < m; ++i) out(m - 1, i) = c[i];
      return out;
    }
  }

  // Column reduction of c to e_0 while maintaining W with cur·W = c, so W's first row is c.
  LatticeVector cur = c;
  IntegerMatrix w = IntegerMatrix::identity(m);
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t k = 0; k < m; ++k) w(dst, k) += q * w(src, k);
  };
  while (true) {
    std::size_t piv = m;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (cur[i] == 0) continue;
      ++nonzero;
      if (piv == m || abs(cur[i]) < abs(cur[piv])) piv = i;
    }
    if (nonzero == 1) {
      if (cur[piv] < 0) {
        cur[piv] = 1;
        for (std::size_t k = 0; k < m; ++k) w(piv, k) = -w(piv, k);
      }
      if (piv != 0) {
        std::swap(cur[piv], cur[0]);
        for (std::size_t k = 0; k < m; ++k) std::swap(w(piv, k), w(0, k));
      }
      break;
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (j == piv || cur[j] == 0) continue;
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), cur[j].get_mpz_t(), cur[piv].get_mpz_t());
      cur[j] -= q * cur[piv];
      add_row(piv, j, q);
    }
  }
  IntegerMatrix out(m, m);
  for (std::size_t r = 1; r < m; ++r)
    for (std::size_t k = 0; k < m; ++k) out(r - 1, k) = w(r, k);
  for (std::size_t k = 0; k < m; ++k) out(m - 1, k) = w(0, k);
  return out;
}

namespace {

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

// Rational inverse of a square integer matrix, or none when singular.
std::optional<RationalMatrix> rational_inverse(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  RationalMatrix aug(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = m(r, c);
    aug[r][n + r] = 1;
  }
  auto piv = row_reduce(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv[r][c] = aug[r][n + c];
  return inv;
}

LatticeVector scale_to_primitive(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * l;
    out[i] = s.get_num();
  }
  return primitive(out);
}

}  // namespace

IntegerMatrix inverse_unimodular(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::kDimension, "inverse of a non-square matrix");
  const Integer d = determinant(m);
  if (d != 1 && d != -1) fail(ErrorCode::kPrecondition, "matrix is not unimodular");
  auto inv = rational_inverse(m);
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = (*inv)[r][c].get_num();
  return out;
}

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const IntegerMatrix& m) {
  auto a = to_rational(m);
  return row_reduce(a).size();
}

std::size_t rank(const std::vector<LatticeVector>& rows) {
  if (rows.empty()) return 0;
  return rank(IntegerMatrix::from_rows(rows));
}

std::vector<LatticeVector> integer_nullspace(const IntegerMatrix& m) {
  auto a = to_rational(m);
  auto piv = row_reduce(a);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<LatticeVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    basis.push_back(scale_to_primitive(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_rational(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) fail(ErrorCode::kDimension, "solve_rational: row count mismatch");
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  RationalMatrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  auto piv = row_reduce(aug);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
  return x;
}

// ---------------------------------------------------------------- affine maps

AffineUnimodularMap::AffineUnimodularMap(IntegerMatrix linear, LatticeVector translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {
  if (linear_.rows() != linear_.cols() || linear_.rows() != translation_.dim())
    fail(ErrorCode::kDimension, "affine map dimension mismatch");
  const Integer d = determinant(linear_);
  if (d != 1 && d != -1) fail(ErrorCode::kPrecondition, "linear part is not unimodular (det " + d.get_str() + ")");
}

AffineUnimodularMap AffineUnimodularMap::identity(std::size_t n) {
  return AffineUnimodularMap(IntegerMatrix::identity(n), LatticeVector(n));
}

LatticeVector AffineUnimodularMap::apply(const LatticeVector& x) const { return linear_ * x + translation_; }

std::vector<LatticeVector> AffineUnimodularMap::apply(const std::vector<LatticeVector>& xs) const {
  std::vector<LatticeVector> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(apply(x));
  return out;
}

AffineUnimodularMap AffineUnimodularMap::compose(const AffineUnimodularMap& other) const {
  return AffineUnimodularMap(linear_ * other.linear_, linear_ * other.translation_ + translation_);
}

AffineUnimodularMap AffineUnimodularMap::inverse() const {
  IntegerMatrix inv = inverse_unimodular(linear_);
  return AffineUnimodularMap(inv, -(inv * translation_));
}

AffineFrameSolver::AffineFrameSolver(const std::vector<LatticeVector>& src) {
  if (src.empty()) fail(ErrorCode::kDimension, "affine frame needs n+1 points");
  n_ = src[0].dim();
  if (src.size() != n_ + 1) fail(ErrorCode::kDimension, "affine frame needs exactly n+1 points");
  origin_ = src[0];
  std::vector<LatticeVector> cols;
  for (std::size_t i = 1; i <= n_; ++i) cols.push_back(src[i] - src[0]);
  IntegerMatrix s = IntegerMatrix::from_columns(cols);
  if (n_ == 0) {
    det_ = 1;
    return;
  }
  det_ = determinant(s);
  if (det_ == 0) fail(ErrorCode::kPrecondition, "source frame is affinely dependent");
  auto inv = rational_inverse(s);
  adjugate_ = IntegerMatrix(n_, n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) {
      Rational x = (*inv)[r][c] * det_;
      adjugate_(r, c) = x.get_num();
    }
}

std::optional<AffineUnimodularMap> AffineFrameSolver::solve(const std::vector<LatticeVector>& dst) const {
  if (dst.size() != n_ + 1) fail(ErrorCode::kDimension, "target frame size mismatch");
  IntegerMatrix a(n_, n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      Integer s = 0;
      for (std::size_t k = 0; k < n_; ++k) s += (dst[k + 1][r] - dst[0][r]) * adjugate_(k, c);
      if (!mpz_divisible_p(s.get_mpz_t(), det_.get_mpz_t())) return std::nullopt;
      mpz_divexact(a(r, c).get_mpz_t(), s.get_mpz_t(), det_.get_mpz_t());
    }
  }
  const Integer d = determinant(a);
  if (d != 1 && d != -1) return std::nullopt;
  LatticeVector b = dst[0] - a * origin_;
  return AffineUnimodularMap(std::move(a), std::move(b));
}

std::optional<AffineUnimodularMap> solve_affine_frame(const std::vector<LatticeVector>& src,
                                                      const std::vector<LatticeVector>& dst) {
  return AffineFrameSolver(src).solve(dst);
}

AffineUnimodularMap random_affine_unimodular(std::size_t n, std::mt19937_64& rng, int steps, int shift) {
  IntegerMatrix u = IntegerMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> mult(-2, 2);
  for (int s = 0; s < steps && n > 1; ++s) {
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    while (j == i) j = pick(rng);
    int q = mult(rng);
    if (q == 0) q = 1;
    for (std::size_t k = 0; k < n; ++k) u(i, k) += q * u(j, k);
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution flip(0.5);
  IntegerMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = flip(rng) ? -1 : 1;
  std::uniform_int_distribution<int> off(-shift, shift);
  LatticeVector b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = off(rng);
  return AffineUnimodularMap(p * u, b);
}

}  // namespace toric
