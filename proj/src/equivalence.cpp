#include "toric/equivalence.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <utility>

#include "toric/constructions.hpp"
#include "toric/ehrhart.hpp"
#include "toric/errors.hpp"
#include "toric/lattice_count.hpp"

namespace toric {

namespace {

// (degree, number of facets through the vertex)
using VertexInvariant = std::pair<std::size_t, std::size_t>;

std::vector<VertexInvariant> vertex_invariants(const LatticePolytope& p) {
  const auto degrees = p.vertex_degrees();
  std::vector<VertexInvariant> inv(p.num_vertices());
  for (std::size_t v = 0; v < inv.size(); ++v) inv[v].first = degrees[v];
  for (const auto& f : p.facet_incidence())
    for (std::size_t v = f.find_first(); v != VertexSet::npos; v = f.find_next(v)) ++inv[v].second;
  return inv;
}

std::vector<VertexInvariant> facet_signature(const VertexSet& f, const std::vector<VertexInvariant>& inv) {
  std::vector<VertexInvariant> sig;
  for (std::size_t v = f.find_first(); v != VertexSet::npos; v = f.find_next(v)) sig.push_back(inv[v]);
  std::sort(sig.begin(), sig.end());
  return sig;
}

std::vector<std::size_t> members(const VertexSet& f) {
  std::vector<std::size_t> out;
  for (std::size_t v = f.find_first(); v != VertexSet::npos; v = f.find_next(v)) out.push_back(v);
  return out;
}

// Picks n affinely independent vertices of the facet, in index order.
std::vector<std::size_t> facet_frame(const LatticePolytope& p, const VertexSet& f) {
  const std::size_t n = p.dim();
  const auto vs = members(f);
  std::vector<std::size_t> chosen{vs.front()};
  std::vector<LatticeVector> diffs;
  for (std::size_t i = 1; i < vs.size() && chosen.size() < n; ++i) {
    diffs.push_back(p.vertices()[vs[i]] - p.vertices()[vs.front()]);
    if (rank(diffs) == diffs.size()) {
      chosen.push_back(vs[i]);
    } else {
      diffs.pop_back();
    }
  }
  if (chosen.size() != n) fail(ErrorCode::kInternal, "facet does not span a hyperplane");
  return chosen;
}

// Calls visit(seq) for each injective sequence from `pool` whose i-th entry satisfies ok(i, v);
// stops once visit returns true.
template <class Ok, class Visit>
bool for_each_labeling(const std::vector<std::size_t>& pool, std::size_t length, Ok ok, Visit visit) {
  std::vector<std::size_t> seq;
  std::vector<bool> used(pool.size(), false);
  auto rec = [&](auto&& self) -> bool {
    if (seq.size() == length) return visit(seq);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (used[i] || !ok(seq.size(), pool[i])) continue;
      used[i] = true;
      seq.push_back(pool[i]);
      if (self(self)) return true;
      seq.pop_back();
      used[i] = false;
    }
    return false;
  };
  return rec(rec);
}

}  // namespace

bool verify_witness(const LatticePolytope& from, const LatticePolytope& to, const AffineUnimodularMap& map) {
  if (from.dim() != to.dim() || map.dim() != from.dim() || from.num_vertices() != to.num_vertices()) return false;
  std::vector<LatticeVector> images = map.apply(from.vertices());
  std::sort(images.begin(), images.end());
  return images == to.vertices();
}

EquivalenceWitness unimodular_equivalent(const LatticePolytope& d1, const LatticePolytope& d2) {
  if (d1.dim() != d2.dim()) fail(ErrorCode::kDimension, "polytopes have different dimensions");
  if (d1.dim() < 1) fail(ErrorCode::kPrecondition, "equivalence needs dimension >= 1");
  EquivalenceWitness out;
  if (d1.num_vertices() != d2.num_vertices() || f_vector(d1) != f_vector(d2)) return out;
  const auto inv1 = vertex_invariants(d1);
  const auto inv2 = vertex_invariants(d2);
  {
    auto a = inv1, b = inv2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return out;
  }
  const auto& fac1 = d1.facet_incidence();
  const auto& fac2 = d2.facet_incidence();
  std::map<std::vector<VertexInvariant>, std::size_t> sig_count;
  for (const auto& f : fac2) ++sig_count[facet_signature(f, inv2)];

  // Anchor on the d1 facet whose signature is rarest among the d2 facets.
  std::size_t anchor = 0;
  std::size_t best = SIZE_MAX;
  for (std::size_t i = 0; i < fac1.size(); ++i) {
    auto it = sig_count.find(facet_signature(fac1[i], inv1));
    const std::size_t c = it == sig_count.end() ? 0 : it->second;
    if (c < best) {
      best = c;
      anchor = i;
    }
  }
  if (best == 0) return out;
  const auto anchor_sig = facet_signature(fac1[anchor], inv1);
  const auto frame = facet_frame(d1, fac1[anchor]);
  std::size_t apex = SIZE_MAX;
  std::map<VertexInvariant, std::size_t> inv2_count;
  for (const auto& v : inv2) ++inv2_count[v];
  for (std::size_t v = 0; v < d1.num_vertices(); ++v) {
    if (fac1[anchor].test(v)) continue;
    if (apex == SIZE_MAX || inv2_count[inv1[v]] < inv2_count[inv1[apex]]) apex = v;
  }
  std::vector<LatticeVector> src;
  for (std::size_t v : frame) src.push_back(d1.vertices()[v]);
  src.push_back(d1.vertices()[apex]);
  const AffineFrameSolver solver(src);
  const std::size_t n = d1.dim();

  std::atomic<bool> found{false};
  const long num_facets = static_cast<long>(fac2.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long fi = 0; fi < num_facets; ++fi) {
    if (found.load()) continue;
    const VertexSet& f2 = fac2[static_cast<std::size_t>(fi)];
    if (facet_signature(f2, inv2) != anchor_sig) continue;
    const auto pool = members(f2);
    for_each_labeling(
        pool, n, [&](std::size_t i, std::size_t v) { return inv2[v] == inv1[frame[i]]; },
        [&](const std::vector<std::size_t>& seq) {
          if (found.load()) return true;
          std::vector<LatticeVector> dst;
          for (std::size_t v : seq) dst.push_back(d2.vertices()[v]);
          dst.emplace_back();
          for (std::size_t y = 0; y < d2.num_vertices(); ++y) {
            if (f2.test(y) || inv2[y] != inv1[apex]) continue;
            dst.back() = d2.vertices()[y];
            auto map = solver.solve(dst);
            if (!map || !verify_witness(d1, d2, *map)) continue;
#pragma omp critical(toric_equivalence_found)
            {
              if (!found.load()) {
                out.equivalent = true;
                out.map = std::move(map);
                found.store(true);
              }
            }
            return true;
          }
          return false;
        });
  }
  return out;
}

std::vector<LatticeVector> canonical_form(const LatticePolytope& d) {
  if (!is_toric_diagram(d)) fail(ErrorCode::kPrecondition, "canonical_form requires a toric diagram");
  const std::size_t n = d.dim();
  const auto& fac = d.facets();
  const auto& inc = d.facet_incidence();
  std::vector<LatticeVector> best;
  for (std::size_t fi = 0; fi < fac.size(); ++fi) {
    const LatticeVector w = bezout_vector(fac[fi].normal);
    auto vs = members(inc[fi]);
    std::sort(vs.begin(), vs.end());
    do {
      const LatticeVector& v1 = d.vertices()[vs[0]];
      std::vector<LatticeVector> cols;
      for (std::size_t i = 1; i < n; ++i) cols.push_back(d.vertices()[vs[i]] - v1);
      cols.push_back(w);
      const IntegerMatrix u = inverse_unimodular(IntegerMatrix::from_columns(cols));
      std::vector<LatticeVector> ys;
      for (const auto& x : d.vertices()) ys.push_back(u * (x - v1));
      Integer h = 0;
      for (const auto& y : ys)
        if (y[n - 1] > 0 && (h == 0 || y[n - 1] < h)) h = y[n - 1];
      for (const auto& p : ys) {
        if (p[n - 1] != h) continue;
        std::vector<LatticeVector> cand = ys;
        for (std::size_t i = 0; i + 1 < n; ++i) {
          const Integer s = floor_div(p[i], h);
          if (s == 0) continue;
          for (auto& y : cand) y[i] -= s * y[n - 1];
        }
        std::sort(cand.begin(), cand.end());
        if (best.empty() || cand < best) best = std::move(cand);
      }
    } while (std::next_permutation(vs.begin(), vs.end()));
  }
  return best;
}

bool ehrhart_equivalent(const LatticePolytope& d1, const LatticePolytope& d2) {
  if (d1.dim() != d2.dim()) fail(ErrorCode::kDimension, "polytopes have different dimensions");
  return ehrhart(d1).hstar() == ehrhart(d2).hstar();
}

FamilyIdentification identify_Dk(const LatticePolytope& s) {
  const std::size_t n = s.dim();
  if (n < 2) fail(ErrorCode::kNotInFamily, "the D_k family starts in dimension 2");
  if (!is_toric_diagram(s)) fail(ErrorCode::kPrecondition, "identify_Dk requires a toric diagram");
  std::vector<Integer> expected(n + 1, 1);
  expected[n] = 0;
  if (!(ehrhart(s).hstar() == HStarVector(expected))) fail(ErrorCode::kNotInFamily, "h* is not (1, ..., 1, 0)");
  if (s.num_vertices() != n + 2 || count_points(s, 1) != static_cast<long>(n + 2))
    fail(ErrorCode::kNotInFamily, "lattice points are not exactly n+2 vertices");

  IntegerMatrix m(n + 1, n + 2);
  for (std::size_t j = 0; j < n + 2; ++j) {
    for (std::size_t i = 0; i < n; ++i) m(i, j) = s.vertices()[j][i];
    m(n, j) = 1;
  }
  const auto kernel = integer_nullspace(m);
  if (kernel.size() != 1) fail(ErrorCode::kInternal, "affine dependency is not unique");
  const LatticeVector& lambda = kernel.front();
  std::vector<std::size_t> pos, neg;
  for (std::size_t j = 0; j < n + 2; ++j) {
    if (lambda[j] == 0) fail(ErrorCode::kInternal, "affine dependency has a zero coefficient");
    (lambda[j] > 0 ? pos : neg).push_back(j);
  }

  for (const auto* apices : {&pos, &neg}) {
    if (apices->size() != 2) continue;
    const auto& base = apices == &pos ? neg : pos;
    bool unit_base = true;
    for (std::size_t j : base)
      if (abs(lambda[j]) != 1) unit_base = false;
    Integer ca = abs(lambda[(*apices)[0]]);
    Integer cb = abs(lambda[(*apices)[1]]);
    if (!unit_base || ca + cb != static_cast<long>(n)) continue;
    std::size_t small = (*apices)[0];
    std::size_t large = (*apices)[1];
    if (cb < ca) {
      std::swap(small, large);
      std::swap(ca, cb);
    }
    const Integer diff = cb - ca;
    const long k = diff.get_si();
    if ((static_cast<long>(n) - k) % 2 != 0) fail(ErrorCode::kInternal, "apex coefficients violate k ≡ n (mod 2)");
    const LatticePolytope target = family_Dk(n, k);
    const auto dk = family_Dk_vertices(n, k);
    std::vector<LatticeVector> base_targets;
    for (std::size_t i = 0; i + 1 < n; ++i) base_targets.push_back(dk[i]);
    base_targets.push_back(dk[n + 1]);
    std::sort(base_targets.begin(), base_targets.end());

    // With k = 0 both apices carry n/2 and either may play a_n.
    std::vector<std::size_t> small_apex{small};
    if (k == 0) small_apex.push_back(large);
    for (std::size_t sm : small_apex) {
      std::vector<LatticeVector> src;
      for (std::size_t j : base) src.push_back(s.vertices()[j]);
      src.push_back(s.vertices()[sm]);
      std::vector<LatticeVector> diffs;
      for (std::size_t i = 1; i < src.size(); ++i) diffs.push_back(src[i] - src[0]);
      if (rank(diffs) != n) continue;
      const AffineFrameSolver solver(src);
      std::vector<LatticeVector> dst = base_targets;
      do {
        std::vector<LatticeVector> full = dst;
        full.push_back(dk[n - 1]);
        auto map = solver.solve(full);
        if (map && verify_witness(s, target, *map)) return {k, *map};
      } while (std::next_permutation(dst.begin(), dst.end()));
    }
  }
  fail(ErrorCode::kInternal, "no bipyramid frame maps onto D_k");
}

EquivalenceWitness is_small_cross(const LatticePolytope& s) {
  const std::size_t n = s.dim();
  EquivalenceWitness out;
  auto reject = [&](const char* step) {
    out.failed_step = step;
    return out;
  };
  if (n < 1) return reject("hstar");
  const auto poly = ehrhart(s);
  if (!(poly.hstar() == HStarVector::binomial_row(n, n - 1))) return reject("hstar");
  const long nn = static_cast<long>(n);
  if (count_points(s, 1) != 2 * nn) return reject("lattice_points_t1");
  if (count_points(s, 2) != 2 * nn * nn + 1) return reject("lattice_points_t2");
  const std::size_t edges = n == 1 ? 0 : s.edges().size();
  if (edges != 2 * n * (n - 1)) return reject("edge_count");
  const auto g = gorenstein_index(s);
  if (!g || g->index != 2) return reject("gorenstein_index");

  // In 2S - w the vertices come in antipodal pairs, i.e. v pairs with w - v.
  const LatticeVector& w = g->interior_point;
  if (s.num_vertices() != 2 * n) return reject("antipodal_pairing");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t v = 0; v < s.num_vertices(); ++v) {
    auto partner = s.vertex_index(w - s.vertices()[v]);
    if (!partner || *partner == v) return reject("antipodal_pairing");
    if (v < *partner) pairs.emplace_back(v, *partner);
  }
  if (pairs.size() != n) return reject("antipodal_pairing");

  // Coordinate permutations, x_i -> x_n - x_i and x -> e_n - x are symmetries of S_n, so only
  // the pair sent to {0, e_n} has to be chosen.
  const LatticePolytope target = small_cross_polytope(n);
  std::vector<LatticeVector> dst{LatticeVector(n), LatticeVector::unit(n, n - 1)};
  for (std::size_t i = 0; i + 1 < n; ++i) dst.push_back(LatticeVector::unit(n, i));
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<LatticeVector> src{s.vertices()[pairs[a].first], s.vertices()[pairs[a].second]};
    for (std::size_t b = 0; b < n; ++b)
      if (b != a) src.push_back(s.vertices()[pairs[b].first]);
    std::vector<LatticeVector> diffs;
    for (std::size_t i = 1; i < src.size(); ++i) diffs.push_back(src[i] - src[0]);
    if (rank(diffs) != n) continue;
    auto map = solve_affine_frame(src, dst);
    if (map && verify_witness(s, target, *map)) {
      out.equivalent = true;
      out.map = std::move(map);
      return out;
    }
  }
  return reject("frame_normalization");
}

}  // namespace toric
