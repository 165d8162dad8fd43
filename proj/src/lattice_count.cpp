#include "toric/lattice_count.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "toric/errors.hpp"

namespace toric {

namespace {

using u128 = unsigned __int128;
constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

inline std::int64_t fdiv(std::int64_t a, std::int64_t b) {  // b > 0
  std::int64_t q = a / b;
  if ((a % b) != 0 && a < 0) --q;
  return q;
}

inline std::int64_t cdiv(std::int64_t a, std::int64_t b) {  // b > 0
  std::int64_t q = a / b;
  if ((a % b) != 0 && a > 0) ++q;
  return q;
}

Integer from_u128(u128 x) {
  Integer hi(static_cast<unsigned long>(x >> 64));
  Integer lo(static_cast<unsigned long>(x & 0xFFFFFFFFFFFFFFFFULL));
  return (hi << 64) + lo;
}

// Trie for the constraints of `sys` with the given key columns; `depth` leading
// coordinates are folded in before the top-level (group) minima are used.
CountingPlan::System make_system(const HalfspaceSystem& sys, std::size_t depth,
                                 const std::vector<std::size_t>& key_columns, Integer& max_offset,
                                 Integer& coefficient_sum) {
  struct Row {
    std::vector<std::int64_t> key;  // key columns, then a_{depth-1}, ..., a_0
    std::int64_t offset;
  };
  const std::size_t g = key_columns.size();
  std::vector<Row> rows;
  for (const auto& h : sys) {
    bool keyed = true;
    for (auto c : key_columns)
      if (g == 1 && h.normal[c] == 0) keyed = false;
    if (!keyed) continue;
    Row r;
    r.offset = to_int64(h.offset);
    for (auto c : key_columns) r.key.push_back(to_int64(h.normal[c]));
    for (std::size_t i = depth; i-- > 0;) r.key.push_back(to_int64(h.normal[i]));
    Integer sum = 0;
    for (const auto& c : h.normal) sum += abs(c);
    if (abs(h.offset) > max_offset) max_offset = abs(h.offset);
    if (sum > coefficient_sum) coefficient_sum = sum;
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    return x.key == y.key ? x.offset < y.offset : x.key < y.key;
  });
  rows.erase(std::unique(rows.begin(), rows.end(), [](const Row& x, const Row& y) { return x.key == y.key; }),
             rows.end());

  CountingPlan::System out;
  out.depth = depth;
  out.coef.resize(depth);
  out.child_start.resize(depth + 1);
  for (const auto& r : rows) out.offsets.push_back(r.offset);
  // rep[c]: a row representing level-i node c.
  std::vector<std::size_t> rep(rows.size());
  for (std::size_t c = 0; c < rows.size(); ++c) rep[c] = c;
  for (std::size_t i = 1; i <= depth; ++i) {
    const std::size_t coef_pos = g + depth - i;  // position of a_{i-1} in the key
    std::vector<std::size_t> next_rep;
    auto& starts = out.child_start[i];
    for (std::size_t c = 0; c < rep.size(); ++c) {
      out.coef[i - 1].push_back(rows[rep[c]].key[coef_pos]);
      const bool fresh = c == 0 || !std::equal(rows[rep[c]].key.begin(), rows[rep[c]].key.begin() + static_cast<long>(coef_pos),
                                               rows[rep[c - 1]].key.begin());
      if (fresh) {
        starts.push_back(c);
        next_rep.push_back(rep[c]);
      }
    }
    starts.push_back(rep.size());
    rep = std::move(next_rep);
  }
  for (auto r : rep) out.group_key.emplace_back(rows[r].key.begin(), rows[r].key.begin() + static_cast<long>(g));
  return out;
}

struct SystemState {
  std::vector<std::vector<std::int64_t>> val;  // val[i][node], i = 0..depth
};

struct State {
  std::vector<SystemState> levels;
  SystemState leaf;
  u128 total = 0;
  u128 interior = 0;
};

class Kernel {
 public:
  Kernel(const CountingPlan& plan, std::int64_t t) : plan_(plan), t_(t), n_(plan.dim) {}

  void init_system(const CountingPlan::System& sys, SystemState& st) const {
    st.val.resize(sys.depth + 1);
    st.val[0].resize(sys.offsets.size());
    for (std::size_t c = 0; c < sys.offsets.size(); ++c) st.val[0][c] = t_ * sys.offsets[c];
    for (std::size_t i = 1; i <= sys.depth; ++i) st.val[i].assign(sys.child_start[i].size() - 1, 0);
  }

  void init(State& s) const {
    s.levels.resize(plan_.levels.size());
    for (std::size_t j = 0; j < plan_.levels.size(); ++j) init_system(plan_.levels[j], s.levels[j]);
    if (n_ >= 2) init_system(plan_.leaf, s.leaf);
    s.total = s.interior = 0;
  }

  // Lift level-i values to level i+1 with x_i = x.
  static void lift(const CountingPlan::System& sys, SystemState& st, std::size_t i, std::int64_t x) {
    const auto& starts = sys.child_start[i + 1];
    const std::int64_t* coef = sys.coef[i].data();
    const std::int64_t* in = st.val[i].data();
    std::int64_t* out = st.val[i + 1].data();
    const std::size_t parents = starts.size() - 1;
    for (std::size_t p = 0; p < parents; ++p) {
      std::int64_t m = kInf;
      for (std::size_t c = starts[p]; c < starts[p + 1]; ++c) m = std::min(m, coef[c] * x + in[c]);
      out[p] = m;
    }
  }

  // Fix x_j = x in every system that still needs it.
  void fix(State& s, std::size_t j, std::int64_t x) const {
    for (std::size_t k = j + 1; k < plan_.levels.size(); ++k) lift(plan_.levels[k], s.levels[k], j, x);
    if (n_ >= 2 && j < plan_.leaf.depth) lift(plan_.leaf, s.leaf, j, x);
  }

  // Closed integer range of x_j once x_0..x_{j-1} are fixed.
  bool range(const State& s, std::size_t j, std::int64_t& lo, std::int64_t& hi) const {
    const auto& sys = plan_.levels[j];
    const auto& top = s.levels[j].val[sys.depth];
    lo = -kInf;
    hi = kInf;
    for (std::size_t g = 0; g < top.size(); ++g) {
      const std::int64_t a = sys.group_key[g][0];
      if (a > 0) {
        lo = std::max(lo, a == 1 ? -top[g] : cdiv(-top[g], a));
      } else {
        hi = std::min(hi, a == -1 ? top[g] : fdiv(top[g], -a));
      }
    }
    return lo <= hi;
  }

  void descend(State& s, std::size_t j) const {
    if (j + 2 == n_) {
      sweep(s);
      return;
    }
    std::int64_t lo, hi;
    if (!range(s, j, lo, hi)) return;
    for (std::int64_t x = lo; x <= hi; ++x) {
      fix(s, j, x);
      descend(s, j + 1);
    }
  }

  // The last two coordinates: x_{n-2} over its range, x_{n-1} solved per group.
  void sweep(State& s) const {
    std::int64_t lo, hi;
    if (!range(s, n_ - 2, lo, hi)) return;
    const auto& gmin = s.leaf.val[plan_.leaf.depth];
    const std::size_t groups = gmin.size();
    const auto& keys = plan_.leaf.group_key;
    for (std::int64_t x = lo; x <= hi; ++x) {
      std::int64_t clo = -kInf, chi = kInf, slo = -kInf, shi = kInf;
      bool closed_ok = true, strict_ok = true;
      for (std::size_t g = 0; g < groups; ++g) {
        const std::int64_t v = gmin[g] + keys[g][0] * x;
        const std::int64_t b = keys[g][1];
        if (b == 1) {
          clo = std::max(clo, -v);
          slo = std::max(slo, -v + 1);
        } else if (b == -1) {
          chi = std::min(chi, v);
          shi = std::min(shi, v - 1);
        } else if (b > 0) {
          clo = std::max(clo, cdiv(-v, b));
          slo = std::max(slo, fdiv(-v, b) + 1);
        } else if (b < 0) {
          chi = std::min(chi, fdiv(v, -b));
          shi = std::min(shi, cdiv(v, -b) - 1);
        } else {
          if (v < 0) closed_ok = false;
          if (v <= 0) strict_ok = false;
        }
      }
      if (closed_ok && chi >= clo) s.total += static_cast<u128>(chi - clo + 1);
      if (strict_ok && shi >= slo) s.interior += static_cast<u128>(shi - slo + 1);
    }
  }

  PointCounts one_dimensional() const {
    State s;
    init(s);
    const auto& sys = plan_.levels[0];
    const auto& top = s.levels[0].val[0];
    std::int64_t clo = -kInf, chi = kInf, slo = -kInf, shi = kInf;
    for (std::size_t g = 0; g < top.size(); ++g) {
      const std::int64_t a = sys.group_key[g][0];
      const std::int64_t v = top[g];
      if (a > 0) {
        clo = std::max(clo, cdiv(-v, a));
        slo = std::max(slo, fdiv(-v, a) + 1);
      } else {
        chi = std::min(chi, fdiv(v, -a));
        shi = std::min(shi, cdiv(v, -a) - 1);
      }
    }
    PointCounts out{0, 0};
    if (chi >= clo) out.total = Integer(static_cast<long>(chi - clo + 1));
    if (shi >= slo) out.interior = Integer(static_cast<long>(shi - slo + 1));
    return out;
  }

 private:
  const CountingPlan& plan_;
  std::int64_t t_;
  std::size_t n_;
};

void check_overflow(const CountingPlan& plan, std::int64_t t) {
  if (t < 0) fail(ErrorCode::kPrecondition, "dilation factor must be nonnegative");
  const Integer bound = Integer(static_cast<long>(t)) * (plan.max_offset + plan.coefficient_sum * plan.max_coordinate);
  const Integer limit = Integer(1) << 62;
  if (bound >= limit) fail(ErrorCode::kOverflow, "dilation too large for the 64-bit counting kernel");
}

PointCounts trivial_zero() { return PointCounts{1, 0}; }

}  // namespace

CountingPlan make_counting_plan(const LatticePolytope& p) {
  CountingPlan plan;
  const std::size_t n = p.dim();
  if (n == 0) fail(ErrorCode::kDimension, "counting needs dimension >= 1");
  plan.dim = n;
  plan.max_offset = 0;
  plan.coefficient_sum = 0;
  plan.max_coordinate = 0;
  for (const auto& v : p.vertices())
    for (const auto& c : v)
      if (abs(c) > plan.max_coordinate) plan.max_coordinate = abs(c);
  const std::size_t slice_levels = n >= 2 ? n - 1 : 1;
  for (std::size_t j = 0; j < slice_levels; ++j) {
    const LatticePolytope q = project_prefix(p, j + 1);
    plan.levels.push_back(make_system(q.facets(), j, {j}, plan.max_offset, plan.coefficient_sum));
  }
  if (n >= 2) plan.leaf = make_system(p.facets(), n - 2, {n - 2, n - 1}, plan.max_offset, plan.coefficient_sum);
  return plan;
}

PointCounts count_lattice_points_serial(const CountingPlan& plan, std::int64_t t) {
  check_overflow(plan, t);
  if (t == 0) return trivial_zero();
  Kernel k(plan, t);
  if (plan.dim == 1) return k.one_dimensional();
  State s;
  k.init(s);
  k.descend(s, 0);
  return PointCounts{from_u128(s.total), from_u128(s.interior)};
}

PointCounts count_lattice_points_parallel(const CountingPlan& plan, std::int64_t t) {
  check_overflow(plan, t);
  if (t == 0) return trivial_zero();
  if (plan.dim <= 2) return count_lattice_points_serial(plan, t);
  Kernel k(plan, t);
  State root;
  k.init(root);
  std::int64_t lo, hi;
  if (!k.range(root, 0, lo, hi)) return PointCounts{0, 0};
  u128 total = 0, interior = 0;
#pragma omp parallel
  {
    State s;
    k.init(s);
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t x = lo; x <= hi; ++x) {
      k.fix(s, 0, x);
      k.descend(s, 1);
    }
#pragma omp critical
    {
      total += s.total;
      interior += s.interior;
    }
  }
  return PointCounts{from_u128(total), from_u128(interior)};
}

PointCounts count_lattice_points(const CountingPlan& plan, std::int64_t t) {
#ifdef _OPENMP
  return count_lattice_points_parallel(plan, t);
#else
  return count_lattice_points_serial(plan, t);
#endif
}

std::vector<LatticeVector> lattice_points(const LatticePolytope& p, std::int64_t t) {
  if (t < 0) fail(ErrorCode::kPrecondition, "dilation factor must be nonnegative");
  const std::size_t n = p.dim();
  if (t == 0) return {LatticeVector(n)};
  std::vector<HalfspaceSystem> levels;
  for (std::size_t j = 0; j < n; ++j) levels.push_back(project_prefix(p, j + 1).facets());
  std::vector<LatticeVector> out;
  std::vector<Integer> prefix;
  const Integer tt(static_cast<long>(t));
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == n) {
      out.emplace_back(prefix);
      return;
    }
    bool has_lo = false, has_hi = false;
    Integer lo, hi;
    for (const auto& h : levels[j]) {
      const Integer& a = h.normal[j];
      if (a == 0) continue;
      Integer v = tt * h.offset;
      for (std::size_t i = 0; i < j; ++i) v += h.normal[i] * prefix[i];
      if (a > 0) {
        Integer b = ceil_div(-v, a);
        if (!has_lo || b > lo) lo = b;
        has_lo = true;
      } else {
        Integer b = floor_div(v, -a);
        if (!has_hi || b < hi) hi = b;
        has_hi = true;
      }
    }
    for (Integer x = lo; x <= hi; ++x) {
      prefix.push_back(x);
      self(self, j + 1);
      prefix.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

void set_worker_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

int worker_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace toric
