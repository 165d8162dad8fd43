#include "toric/ehrhart.hpp"

#include <algorithm>

#include "toric/errors.hpp"
#include "toric/lattice_count.hpp"

namespace toric {

HStarVector::HStarVector(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}

HStarVector::HStarVector(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
}

HStarVector HStarVector::binomial_row(std::size_t n, unsigned long m) {
  std::vector<Integer> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = k <= m ? binomial(static_cast<long>(m), k) : Integer(0);
  return HStarVector(std::move(c));
}

Integer HStarVector::at(long k) const {
  if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

long HStarVector::degree() const {
  for (long k = static_cast<long>(coeffs_.size()) - 1; k >= 0; --k)
    if (coeffs_[static_cast<std::size_t>(k)] != 0) return k;
  return -1;
}

Integer HStarVector::sum() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

Integer EhrhartPolynomial::evaluate(const Integer& t) const {
  const std::size_t n = dim();
  Integer s = 0;
  for (std::size_t k = 0; k <= n; ++k) s += hstar_.coeffs()[k] * binomial(t + static_cast<long>(n - k), n);
  return s;
}

Integer EhrhartPolynomial::evaluate_interior(long t) const {
  Integer v = evaluate(Integer(-t));
  return dim() % 2 == 0 ? v : Integer(-v);
}

std::vector<Rational> EhrhartPolynomial::monomial_coefficients() const {
  // Expand each C(t+n-k, n) = Π_{i=1..n} (t + n - k + 1 - i) / n!.
  const std::size_t n = dim();
  std::vector<Integer> acc(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    const Integer& h = hstar_.coeffs()[k];
    if (h == 0) continue;
    std::vector<Integer> poly{1};
    for (std::size_t i = 1; i <= n; ++i) {
      const long root = static_cast<long>(n) - static_cast<long>(k) + 1 - static_cast<long>(i);
      std::vector<Integer> next(poly.size() + 1, 0);
      for (std::size_t d = 0; d < poly.size(); ++d) {
        next[d + 1] += poly[d];
        next[d] += poly[d] * root;
      }
      poly = std::move(next);
    }
    for (std::size_t d = 0; d <= n; ++d) acc[d] += h * poly[d];
  }
  const Integer nf = factorial(n);
  std::vector<Rational> out;
  for (const auto& a : acc) {
    Rational r(a, nf);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

Integer BettiSequence::at(long k) const {
  if (k < 0) return 0;
  if (k >= static_cast<long>(values.size())) return tail;
  return values[static_cast<std::size_t>(k)];
}

Integer count_points(const LatticePolytope& p, long t) {
  if (t == 0) return 1;
  return count_lattice_points(make_counting_plan(p), t).total;
}

Integer count_interior(const LatticePolytope& p, long t) {
  if (t == 0) return 0;
  return count_lattice_points(make_counting_plan(p), t).interior;
}

Integer count_boundary(const LatticePolytope& p, long t) {
  if (t == 0) return 1;
  const auto c = count_lattice_points(make_counting_plan(p), t);
  return c.total - c.interior;
}

EhrhartPolynomial ehrhart(const LatticePolytope& p) {
  const std::size_t n = p.dim();
  if (n == 0) return EhrhartPolynomial(HStarVector{1});
  const CountingPlan plan = make_counting_plan(p);
  std::vector<Integer> h(n + 1, 0);
  for (std::size_t t = 0; t <= n; ++t) {
    Integer value = t == 0 ? Integer(1) : count_lattice_points(plan, static_cast<std::int64_t>(t)).total;
    for (std::size_t k = 0; k < t; ++k) value -= h[k] * binomial(static_cast<long>(t + n - k), n);
    if (value < 0) fail(ErrorCode::kInternal, "negative h* coefficient; counting is inconsistent");
    h[t] = value;
  }
  EhrhartPolynomial poly{HStarVector(std::move(h))};
  for (std::size_t t = n + 1; t <= n + 2; ++t) {
    const Integer counted = count_lattice_points(plan, static_cast<std::int64_t>(t)).total;
    if (counted != poly.evaluate(static_cast<long>(t)))
      fail(ErrorCode::kInternal, "Ehrhart self-check failed at t = " + std::to_string(t));
  }
  return poly;
}

bool hibi_palindromic(const HStarVector& h) {
  const long n = static_cast<long>(h.dim());
  for (long k = 0; k <= n; ++k)
    if (h.at(k) != h.at(n - k)) return false;
  return true;
}

bool gorenstein_palindromic(const HStarVector& h, int r) {
  const long n = static_cast<long>(h.dim());
  const long top = n + 1 - r;
  if (top < 0) return false;
  for (long k = 0; k <= n; ++k) {
    if (k <= top) {
      if (h.at(k) != h.at(top - k)) return false;
    } else if (h.at(k) != 0) {
      return false;
    }
  }
  return true;
}

BettiSequence contact_betti(const HStarVector& h) {
  const long n = static_cast<long>(h.dim());
  BettiSequence out;
  Integer running = 0;
  for (long k = 0; k <= n; ++k) {
    running += h.at(n - k);
    out.values.push_back(running);
  }
  out.tail = h.sum();
  return out;
}

bool series_product_check(const HStarVector& hd, const HStarVector& hd2, int r, int s) {
  if (r < 1 || s < 1) fail(ErrorCode::kPrecondition, "series_product_check needs r, s >= 1");
  const long len = static_cast<long>(hd2.coeffs().size()) + static_cast<long>(s) * (r - 1);
  std::vector<Integer> prod(static_cast<std::size_t>(len), 0);
  for (int j = 0; j < r; ++j)
    for (std::size_t k = 0; k < hd2.coeffs().size(); ++k) prod[k + static_cast<std::size_t>(s * j)] += hd2.coeffs()[k];
  const long top = std::max(len, static_cast<long>(hd.coeffs().size()));
  for (long k = 0; k < top; ++k) {
    const Integer lhs = hd.at(k);
    const Integer rhs = k < len ? prod[static_cast<std::size_t>(k)] : Integer(0);
    if (lhs != rhs) return false;
  }
  return true;
}

Integer betti_from_quotient(const HStarVector& hd, int r, long i) {
  if (r < 1) fail(ErrorCode::kPrecondition, "betti_from_quotient needs r >= 1");
  Integer s = 0;
  for (long k = 0;; ++k) {
    const long idx = i - r * k - r + 1;
    if (idx < 0) break;
    s += hd.at(idx);
  }
  return s;
}

}  // namespace toric
