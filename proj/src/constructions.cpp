#include "toric/constructions.hpp"

#include <algorithm>
#include <string>

#include "toric/errors.hpp"

namespace toric {

namespace {

void require_dim(std::size_t n) {
  if (n < 1) fail(ErrorCode::kPrecondition, "dimension must be at least 1");
}

LatticeVector all_ones(std::size_t n, long value = 1) {
  LatticeVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = value;
  return v;
}

}  // namespace

LatticePolytope cube(std::size_t n, long lo, long hi) {
  require_dim(n);
  if (lo >= hi) fail(ErrorCode::kPrecondition, "cube needs lo < hi");
  if (n > 20) fail(ErrorCode::kPrecondition, "cube dimension too large");
  std::vector<LatticeVector> vs;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    LatticeVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1UL ? hi : lo;
    vs.push_back(std::move(v));
  }
  return LatticePolytope::from_extreme_points(std::move(vs));
}

LatticePolytope cross_polytope(std::size_t n) {
  require_dim(n);
  std::vector<LatticeVector> vs;
  for (std::size_t i = 0; i < n; ++i) {
    vs.push_back(LatticeVector::unit(n, i));
    vs.push_back(-LatticeVector::unit(n, i));
  }
  return LatticePolytope::from_extreme_points(std::move(vs));
}

LatticePolytope small_cross_polytope(std::size_t n) {
  require_dim(n);
  const LatticeVector top = LatticeVector::unit(n, n - 1);
  std::vector<LatticeVector> vs{LatticeVector(n), top};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    vs.push_back(LatticeVector::unit(n, i));
    vs.push_back(top - LatticeVector::unit(n, i));
  }
  return LatticePolytope::from_extreme_points(std::move(vs));
}

LatticePolytope standard_simplex(std::size_t n) {
  require_dim(n);
  std::vector<LatticeVector> vs{LatticeVector(n)};
  for (std::size_t i = 0; i < n; ++i) vs.push_back(LatticeVector::unit(n, i));
  return LatticePolytope::from_extreme_points(std::move(vs));
}

LatticePolytope pyramid(const LatticePolytope& p) {
  std::vector<LatticeVector> vs;
  for (const auto& v : p.vertices()) vs.push_back(v.extended(0));
  vs.push_back(LatticeVector::unit(p.dim() + 1, p.dim()));
  return LatticePolytope::from_extreme_points(std::move(vs));
}

LatticePolytope pseudo_bipyramid(const LatticePolytope& p, const LatticeVector& s1, const LatticeVector& s2,
                                 bool require_toric) {
  if (s1.dim() != p.dim() || s2.dim() != p.dim()) fail(ErrorCode::kDimension, "apex base points have wrong dimension");
  if (!p.contains(s1) || !p.contains(s2))
    fail(ErrorCode::kPrecondition, "pseudo-bipyramid base points must be lattice points of P");
  if (require_toric) {
    for (const auto& h : p.facets())
      if (h.evaluate(s1) == 0 && h.evaluate(s2) == 0)
        fail(ErrorCode::kValidity, "base points lie on a common facet; the result is not a toric diagram");
  }
  std::vector<LatticeVector> vs;
  for (const auto& v : p.vertices()) vs.push_back(v.extended(0));
  vs.push_back(s1.extended(1));
  vs.push_back(s2.extended(-1));
  return LatticePolytope::from_extreme_points(std::move(vs));
}

PrequantizationResult prequantize(const HalfspaceSystem& system) {
  const std::size_t n = system.dim;
  if (n < 1) fail(ErrorCode::kDimension, "prequantization needs dimension >= 1");
  for (const auto& h : system)
    if (h.normal.dim() != n || content(h.normal) != 1)
      fail(ErrorCode::kPrecondition, "facet normals must be primitive vectors of the system dimension");
  const LatticePolytope p = LatticePolytope::from_halfspaces(system);
  std::vector<Halfspace> given(system.begin(), system.end());
  std::sort(given.begin(), given.end());
  if (given != p.facets().halfspaces) fail(ErrorCode::kPrecondition, "halfspace system is not the irredundant facet system");
  if (!is_delzant(p)) fail(ErrorCode::kPrecondition, "polytope is not Delzant");

  RationalMatrix a;
  std::vector<Rational> b;
  for (const auto& h : system) {
    std::vector<Rational> row;
    for (const auto& x : h.normal) row.emplace_back(x);
    row.emplace_back(h.offset);
    a.push_back(std::move(row));
    b.emplace_back(1);
  }
  auto sol = solve_rational(a, b);
  if (!sol) fail(ErrorCode::kNotGorenstein, "no c with c·(ν, λ) = 1 for every facet");
  const RationalVector cr(*sol);
  if (!cr.is_integral()) fail(ErrorCode::kNotGorenstein, "the solution c is not integral");
  const LatticeVector c = cr.to_lattice();
  if (c[n] <= 0) fail(ErrorCode::kInternal, "prequantization index is not positive");

  const IntegerMatrix t = hermite_completion(c);
  std::vector<LatticeVector> images;
  for (const auto& h : system) {
    const LatticeVector img = t * h.normal.extended(h.offset);
    if (img[n] != 1) fail(ErrorCode::kInternal, "transformed normal is not at height 1");
    images.push_back(img.prefix(n));
  }
  PrequantizationResult out{LatticePolytope::hull(std::move(images)), AffineUnimodularMap(t, LatticeVector(n + 1)), c,
                            static_cast<int>(c[n].get_si())};
  if (!is_toric_diagram(out.diagram)) fail(ErrorCode::kInternal, "prequantization produced a non-toric diagram");
  return out;
}

PrequantizationResult prequantize(const LatticePolytope& p) { return prequantize(p.facets()); }

void validate_family(const FamilyParams& params, bool need_parity) {
  if (params.n < 2) fail(ErrorCode::kPrecondition, "family parameter violates n >= 2");
  if (params.k < 0 || params.k >= static_cast<long>(params.n))
    fail(ErrorCode::kPrecondition, "family parameter violates 0 <= k < n");
  if (need_parity && (static_cast<long>(params.n) - params.k) % 2 != 0)
    fail(ErrorCode::kPrecondition, "family parameter violates k ≡ n (mod 2)");
}

LatticePolytope family_Pk(std::size_t n, long k) {
  validate_family({n, k}, false);
  const long nn = static_cast<long>(n);
  std::vector<LatticeVector> vs;
  for (long height : {-1L, 1L}) {
    const long scale = height < 0 ? nn + k : nn - k;
    LatticeVector base = all_ones(n, -1);
    base[n - 1] = height;
    vs.push_back(base);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      LatticeVector v = base;
      v[i] += scale;
      vs.push_back(std::move(v));
    }
  }
  return LatticePolytope::from_extreme_points(std::move(vs));
}

LatticePolytope family_Pk_half(std::size_t n, long k) {
  validate_family({n, k}, true);
  const LatticeVector shift = all_ones(n);
  std::vector<LatticeVector> vs;
  const LatticePolytope pk = family_Pk(n, k);
  for (const auto& v : pk.vertices()) {
    LatticeVector w = v + shift;
    for (std::size_t i = 0; i < n; ++i) w[i] /= 2;
    vs.push_back(std::move(w));
  }
  return LatticePolytope::from_extreme_points(std::move(vs));
}

LatticePolytope family_Tk(std::size_t n, long k) {
  validate_family({n, k}, false);
  std::vector<LatticeVector> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back(LatticeVector::unit(n, i));
  vs.push_back(-LatticeVector::unit(n, n - 1));
  LatticeVector vk = all_ones(n, -1);
  vk[n - 1] = -k;
  vs.push_back(std::move(vk));
  return LatticePolytope::from_extreme_points(std::move(vs));
}

std::vector<LatticeVector> family_Dk_vertices(std::size_t n, long k) {
  validate_family({n, k}, true);
  std::vector<LatticeVector> a;
  a.emplace_back(n);
  for (std::size_t i = 0; i + 1 < n; ++i) a.push_back(LatticeVector::unit(n, i));
  a.push_back(LatticeVector::unit(n, n - 1) - LatticeVector::unit(n, n - 2));
  LatticeVector last(n);
  for (std::size_t i = 0; i + 2 < n; ++i) last[i] = -1;
  last[n - 2] = -k;
  last[n - 1] = (static_cast<long>(n) + k) / 2;
  a.push_back(std::move(last));
  return a;
}

LatticePolytope family_Dk(std::size_t n, long k) {
  return LatticePolytope::from_extreme_points(family_Dk_vertices(n, k));
}

BottMatrix::BottMatrix(std::size_t n, const std::vector<long>& strictly_lower) : n_(n), full_(n, n) {
  if (strictly_lower.size() != n * (n - 1) / 2)
    fail(ErrorCode::kDimension, "expected n(n-1)/2 strictly lower entries");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) full_(i, j) = strictly_lower[idx++];
    full_(i, i) = -1;
  }
}

BottMatrix BottMatrix::from_full(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::kDimension, "Bott matrix must be square");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) != -1) fail(ErrorCode::kPrecondition, "Bott matrix diagonal must be -1");
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != 0) fail(ErrorCode::kPrecondition, "Bott matrix must be lower triangular");
  }
  BottMatrix out;
  out.n_ = m.rows();
  out.full_ = m;
  return out;
}

bool is_monotone_bott(const BottMatrix& l) {
  const std::size_t n = l.dim();
  for (std::size_t j = 0; j < n; ++j) {
    bool all_zero = true;
    for (std::size_t i = j + 1; i < n; ++i)
      if (l(i, j) != 0) all_zero = false;
    if (all_zero) continue;

    bool single_one = false;
    for (std::size_t q = j + 1; q < n && !single_one; ++q) {
      if (l(q, j) != 1) continue;
      bool rest_zero = true;
      for (std::size_t i = j + 1; i < n; ++i)
        if (i != q && l(i, j) != 0) rest_zero = false;
      single_one = rest_zero;
    }
    if (single_one) continue;

    bool minus_one = false;
    for (std::size_t q = j + 1; q < n && !minus_one; ++q) {
      if (l(q, j) != -1) continue;
      bool ok = true;
      for (std::size_t i = j + 1; i < q; ++i)
        if (l(i, j) != 0) ok = false;
      for (std::size_t i = q + 1; i < n; ++i)
        if (l(i, j) != l(i, q)) ok = false;
      minus_one = ok;
    }
    if (!minus_one) return false;
  }
  return true;
}

HalfspaceSystem bott_moment_system(const BottMatrix& l) {
  const std::size_t n = l.dim();
  HalfspaceSystem sys;
  sys.dim = n;
  for (std::size_t i = 0; i < n; ++i) sys.halfspaces.push_back({LatticeVector::unit(n, i), 1});
  for (std::size_t j = 0; j < n; ++j) sys.halfspaces.push_back({l.full().column(j), 1});
  return sys;
}

LatticePolytope bott_moment_polytope(const BottMatrix& l) { return LatticePolytope::from_halfspaces(bott_moment_system(l)); }

LatticePolytope bott_diagram(const BottMatrix& l) {
  if (!is_monotone_bott(l)) fail(ErrorCode::kValidity, "Bott matrix is not monotone");
  std::vector<LatticeVector> vs;
  for (const auto& h : bott_moment_system(l)) vs.push_back(h.normal);
  return LatticePolytope::hull(std::move(vs));
}

std::vector<BottMatrix> monotone_bott_examples() {
  return {BottMatrix(3, {0, 0, 0}), BottMatrix(3, {0, 0, 1}), BottMatrix(3, {0, 1, -1}), BottMatrix(3, {0, 1, 1}),
          BottMatrix(3, {1, 0, 1})};
}

}  // namespace toric
