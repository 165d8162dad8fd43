#include "toric/cactus.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <utility>

#include "toric/ehrhart.hpp"
#include "toric/errors.hpp"
#include "toric/lattice_count.hpp"

namespace toric {

std::size_t triangle_count(const CactusNode& c) {
  std::size_t n = 0;
  for (const auto& t : c.triangles) n += 1 + triangle_count(t.first) + triangle_count(t.second);
  return n;
}

namespace {

std::string triangle_code(const std::string& a, const std::string& b) {
  return a <= b ? "[" + a + b + "]" : "[" + b + a + "]";
}

std::string node_code(std::vector<std::string> tri_codes) {
  std::sort(tri_codes.begin(), tri_codes.end());
  std::string out = "(";
  for (const auto& s : tri_codes) out += s;
  return out + ")";
}

// Canonicalizes in place and returns the code.
std::string canonicalize_inplace(CactusNode& c) {
  std::vector<std::pair<std::string, CactusTriangle>> tagged;
  for (auto& t : c.triangles) {
    std::string a = canonicalize_inplace(t.first);
    std::string b = canonicalize_inplace(t.second);
    if (b < a) {
      std::swap(t.first, t.second);
      std::swap(a, b);
    }
    tagged.emplace_back(triangle_code(a, b), std::move(t));
  }
  std::sort(tagged.begin(), tagged.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  c.triangles.clear();
  std::string out = "(";
  for (auto& [code, t] : tagged) {
    out += code;
    c.triangles.push_back(std::move(t));
  }
  return out + ")";
}

struct NodeRef {
  std::size_t size;
  std::size_t index;
};

struct TriangleRep {
  std::size_t size;
  NodeRef first;
  NodeRef second;
};

// Isomorphism classes built bottom-up: nodes of size m are multisets of triangle ids with
// sizes summing to m, taken in nondecreasing id order so each multiset appears once.
class ClassTable {
 public:
  explicit ClassTable(std::size_t n) {
    nodes_.push_back({{}});
    for (std::size_t m = 1; m <= n; ++m) {
      add_triangles(m);
      nodes_.push_back(m < n ? build_nodes(m) : build_nodes_parallel(m));
    }
  }

  const std::vector<std::vector<std::size_t>>& nodes(std::size_t m) const { return nodes_[m]; }

  CactusNode materialize(NodeRef r) const {
    CactusNode out;
    for (std::size_t id : nodes_[r.size][r.index]) {
      const auto& t = triangles_[id];
      out.triangles.push_back({materialize(t.first), materialize(t.second)});
    }
    return out;
  }

 private:
  void add_triangles(std::size_t m) {
    for (std::size_t a = 0; a + a <= m - 1; ++a) {
      const std::size_t b = m - 1 - a;
      for (std::size_t i = 0; i < nodes_[a].size(); ++i)
        for (std::size_t j = a == b ? i : 0; j < nodes_[b].size(); ++j) triangles_.push_back({m, {a, i}, {b, j}});
    }
  }

  void extend(std::size_t remaining, std::size_t min_id, std::vector<std::size_t>& cur,
              std::vector<std::vector<std::size_t>>& out) const {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t id = min_id; id < triangles_.size() && triangles_[id].size <= remaining; ++id) {
      cur.push_back(id);
      extend(remaining - triangles_[id].size, id, cur, out);
      cur.pop_back();
    }
  }

  std::vector<std::vector<std::size_t>> build_nodes(std::size_t m) const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    extend(m, 0, cur, out);
    return out;
  }

  // Splits on the first triangle id; chunks are concatenated in id order.
  std::vector<std::vector<std::size_t>> build_nodes_parallel(std::size_t m) const {
    std::vector<std::size_t> firsts;
    for (std::size_t id = 0; id < triangles_.size() && triangles_[id].size <= m; ++id) firsts.push_back(id);
    std::vector<std::vector<std::vector<std::size_t>>> chunks(firsts.size());
    const long count = static_cast<long>(firsts.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long f = 0; f < count; ++f) {
      const std::size_t id = firsts[static_cast<std::size_t>(f)];
      std::vector<std::size_t> cur{id};
      extend(m - triangles_[id].size, id, cur, chunks[static_cast<std::size_t>(f)]);
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto& c : chunks)
      for (auto& v : c) out.push_back(std::move(v));
    return out;
  }

  std::vector<std::vector<std::vector<std::size_t>>> nodes_;
  std::vector<TriangleRep> triangles_;
};

}  // namespace

std::string canonical_code(const CactusNode& c) {
  std::vector<std::string> codes;
  for (const auto& t : c.triangles) codes.push_back(triangle_code(canonical_code(t.first), canonical_code(t.second)));
  return node_code(std::move(codes));
}

CactusNode canonicalize(const CactusNode& c) {
  CactusNode out = c;
  canonicalize_inplace(out);
  return out;
}

CactusNode star_cactus(std::size_t n) {
  CactusNode out;
  out.triangles.resize(n);
  return out;
}

CactusNode chain_cactus(std::size_t n) {
  CactusNode out;
  for (std::size_t i = 0; i < n; ++i) {
    CactusNode next;
    next.triangles.push_back({CactusNode{}, std::move(out)});
    out = std::move(next);
  }
  return out;
}

std::vector<RootedCactus> enumerate_cacti(std::size_t n) {
  if (n < 1) fail(ErrorCode::kPrecondition, "enumeration needs at least one triangle");
  const ClassTable table(n);
  const auto& reps = table.nodes(n);
  std::vector<std::pair<std::string, RootedCactus>> tagged(reps.size());
  const long count = static_cast<long>(reps.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    RootedCactus c = table.materialize({n, static_cast<std::size_t>(i)});
    std::string code = canonicalize_inplace(c);
    tagged[static_cast<std::size_t>(i)] = {std::move(code), std::move(c)};
  }
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<RootedCactus> out;
  out.reserve(tagged.size());
  for (auto& [code, c] : tagged) out.push_back(std::move(c));
  return out;
}

Integer count_cacti(std::size_t n) {
  // N: node classes by size, T: triangle classes (unordered node pairs), N = Euler transform of T.
  std::vector<Integer> nodes(n + 1, 0), tris(n + 1, 0), c(n + 1, 0);
  nodes[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Integer pairs = 0;
    for (std::size_t a = 0; a <= m - 1; ++a) pairs += nodes[a] * nodes[m - 1 - a];
    if ((m - 1) % 2 == 0) pairs += nodes[(m - 1) / 2];
    tris[m] = pairs / 2;
    for (std::size_t d = 1; d <= m; ++d)
      if (m % d == 0) c[m] += Integer(static_cast<unsigned long>(d)) * tris[d];
    Integer s = 0;
    for (std::size_t k = 1; k <= m; ++k) s += c[k] * nodes[m - k];
    nodes[m] = s / static_cast<unsigned long>(m);
  }
  return nodes[n];
}

std::vector<LatticeVector> realization_points(const RootedCactus& c, Extension order) {
  const std::size_t n = triangle_count(c);
  if (n < 1) fail(ErrorCode::kPrecondition, "cactus has no triangles");
  const CactusNode canon = canonicalize(c);
  std::vector<LatticeVector> points{LatticeVector(n)};
  std::size_t k = 0;
  auto attach = [&](const LatticeVector& y) {
    LatticeVector a = LatticeVector::unit(n, k);
    LatticeVector b = y - a;
    ++k;
    points.push_back(a);
    points.push_back(b);
    return std::make_pair(std::move(a), std::move(b));
  };
  if (order == Extension::kDepthFirst) {
    std::function<void(const CactusNode&, const LatticeVector&)> visit = [&](const CactusNode& node,
                                                                              const LatticeVector& y) {
      for (const auto& t : node.triangles) {
        auto [a, b] = attach(y);
        visit(t.first, a);
        visit(t.second, b);
      }
    };
    visit(canon, LatticeVector(n));
  } else {
    std::deque<std::pair<const CactusNode*, LatticeVector>> queue{{&canon, points[0]}};
    while (!queue.empty()) {
      auto [node, y] = queue.front();
      queue.pop_front();
      for (const auto& t : node->triangles) {
        auto [a, b] = attach(y);
        queue.emplace_back(&t.first, std::move(a));
        queue.emplace_back(&t.second, std::move(b));
      }
    }
  }
  return points;
}

LatticePolytope realize(const RootedCactus& c, Extension order) {
  return LatticePolytope::hull(realization_points(c, order));
}

RootedCactus extract_cactus(const LatticePolytope& d) {
  const std::size_t n = d.dim();
  if (n < 1) fail(ErrorCode::kDomain, "extraction needs dimension >= 1");
  std::vector<LatticeVector> pts = lattice_points(d, 1);
  if (pts.size() != 2 * n + 1)
    fail(ErrorCode::kDomain, "expected " + std::to_string(2 * n + 1) + " lattice points, found " +
                                 std::to_string(pts.size()));
  if (!is_toric_diagram(d)) fail(ErrorCode::kDomain, "not a toric diagram");
  if (!(ehrhart(d).hstar() == HStarVector::binomial_row(n, n)))
    fail(ErrorCode::kDomain, "h* differs from the cross-polytope");

  std::optional<LatticeVector> root;
  for (const auto& p : pts)
    if (d.contains_strictly(p)) {
      if (root) fail(ErrorCode::kDomain, "more than one interior lattice point");
      root = p;
    }
  if (!root) fail(ErrorCode::kDomain, "no interior lattice point");
  for (auto& p : pts) p -= *root;
  std::sort(pts.begin(), pts.end());
  auto index_of = [&](const LatticeVector& v) -> std::optional<std::size_t> {
    auto it = std::lower_bound(pts.begin(), pts.end(), v);
    if (it == pts.end() || !(*it == v)) return std::nullopt;
    return static_cast<std::size_t>(it - pts.begin());
  };
  const std::size_t origin = *index_of(LatticeVector(n));

  // children[p] lists the (a, b) pairs of the triangles whose parent is p.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> children(pts.size());
  std::vector<int> parent_count(pts.size(), 0);
  std::size_t num_triangles = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i == origin) continue;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (j == origin) continue;
      if (auto s = index_of(pts[i] + pts[j])) {
        children[*s].emplace_back(i, j);
        ++parent_count[i];
        ++parent_count[j];
        ++num_triangles;
      }
    }
  }
  if (num_triangles != n)
    fail(ErrorCode::kDomain, "found " + std::to_string(num_triangles) + " additive triples, expected " +
                                 std::to_string(n));
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (i != origin && parent_count[i] != 1) fail(ErrorCode::kDomain, "a lattice point lies in no unique triangle");

  std::vector<bool> seen(pts.size(), false);
  std::size_t visited = 0;
  std::function<CactusNode(std::size_t)> build = [&](std::size_t p) {
    if (seen[p]) fail(ErrorCode::kDomain, "additive triples contain a cycle");
    seen[p] = true;
    ++visited;
    CactusNode node;
    for (auto [a, b] : children[p]) node.triangles.push_back({build(a), build(b)});
    return node;
  };
  CactusNode out = build(origin);
  if (visited != pts.size()) fail(ErrorCode::kDomain, "additive triples do not connect to the interior point");
  return canonicalize(out);
}

}  // namespace toric
