#include "toric/cone.hpp"

#include <boost/dynamic_bitset.hpp>

#include "toric/errors.hpp"

namespace toric {

namespace {

struct Ray {
  LatticeVector v;
  boost::dynamic_bitset<> zero;  // processed rows that vanish on v
};

}  // namespace

std::vector<LatticeVector> extreme_rays(const std::vector<LatticeVector>& rows, std::size_t dim) {
  const std::size_t m = rows.size();
  for (const auto& r : rows)
    if (r.dim() != dim) fail(ErrorCode::kDimension, "cone row dimension mismatch");

  // Greedy basis of independent rows.
  std::vector<std::size_t> basis;
  {
    RationalMatrix echelon;
    for (std::size_t i = 0; i < m && basis.size() < dim; ++i) {
      RationalMatrix trial = echelon;
      std::vector<Rational> row(dim);
      for (std::size_t c = 0; c < dim; ++c) row[c] = rows[i][c];
      trial.push_back(row);
      if (row_reduce(trial).size() > echelon.size()) {
        basis.push_back(i);
        echelon.push_back(std::move(row));
      }
    }
  }
  if (basis.size() < dim) fail(ErrorCode::kLowerDimensional, "inequality rows do not span the ambient space");

  // Initial simplicial cone: rays are the columns of B^{-1}.
  RationalMatrix aug(dim, std::vector<Rational>(2 * dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) aug[r][c] = rows[basis[r]][c];
    aug[r][dim + r] = 1;
  }
  row_reduce(aug);
  std::vector<Ray> rays;
  for (std::size_t i = 0; i < dim; ++i) {
    Integer l = 1;
    for (std::size_t r = 0; r < dim; ++r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), aug[r][dim + i].get_den_mpz_t());
    LatticeVector v(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      Rational x = aug[r][dim + i] * l;
      v[r] = x.get_num();
    }
    Ray ray{primitive(v), boost::dynamic_bitset<>(m)};
    for (std::size_t j = 0; j < dim; ++j)
      if (j != i) ray.zero.set(basis[j]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> in_basis(m, false);
  for (auto b : basis) in_basis[b] = true;

  const std::size_t need = dim >= 2 ? dim - 2 : 0;
  for (std::size_t idx = 0; idx < m; ++idx) {
    if (in_basis[idx] || rows[idx].is_zero()) continue;
    std::vector<Integer> s(rays.size());
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot(rows[idx], rays[i].v);
      const int sg = sgn(s[i]);
      (sg > 0 ? pos : sg < 0 ? neg : zer).push_back(i);
    }
    if (neg.empty()) {
      for (auto i : zer) rays[i].zero.set(idx);
      continue;
    }
    std::vector<Ray> next;
    next.reserve(pos.size() + zer.size());
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        boost::dynamic_bitset<> common = rays[p].zero & rays[q].zero;
        if (common.count() < need) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        LatticeVector v = s[p] * rays[q].v - s[q] * rays[p].v;
        common.set(idx);
        next.push_back(Ray{primitive(v), std::move(common)});
      }
    }
    for (std::size_t p : pos) next.push_back(std::move(rays[p]));
    for (std::size_t z : zer) {
      rays[z].zero.set(idx);
      next.push_back(std::move(rays[z]));
    }
    rays = std::move(next);
  }

  std::vector<LatticeVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  return out;
}

}  // namespace toric
