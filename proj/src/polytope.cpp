#include "toric/polytope.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "toric/cone.hpp"
#include "toric/errors.hpp"

namespace toric {

struct LatticePolytope::Cache {
  std::once_flag facets_once;
  HalfspaceSystem facets;
  std::vector<VertexSet> incidence;
  std::once_flag lattice_once;
  FaceLattice lattice;
};

namespace {

void check_dims(const std::vector<LatticeVector>& points) {
  if (points.empty()) fail(ErrorCode::kDegenerateInput, "empty point set");
  const std::size_t n = points[0].dim();
  for (const auto& p : points)
    if (p.dim() != n) fail(ErrorCode::kDimension, "points of mixed dimension");
}

void sort_unique(std::vector<LatticeVector>& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

// Facets of conv(points) as the extreme rays of {(a, b) : a·p + b >= 0 for all p}.
HalfspaceSystem facets_of_points(const std::vector<LatticeVector>& points, std::size_t n) {
  HalfspaceSystem sys;
  sys.dim = n;
  if (n == 0) return sys;
  std::vector<LatticeVector> rows;
  rows.reserve(points.size());
  for (const auto& p : points) rows.push_back(p.extended(1));
  for (auto& ray : extreme_rays(rows, n + 1)) {
    Halfspace h{ray.prefix(n), ray[n]};
    sys.halfspaces.push_back(std::move(h));
  }
  std::sort(sys.halfspaces.begin(), sys.halfspaces.end());
  return sys;
}

std::vector<VertexSet> incidence_of(const HalfspaceSystem& sys, const std::vector<LatticeVector>& vertices) {
  std::vector<VertexSet> inc;
  inc.reserve(sys.size());
  for (const auto& h : sys) {
    VertexSet s(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (h.evaluate(vertices[i]) == 0) s.set(i);
    inc.push_back(std::move(s));
  }
  return inc;
}

std::size_t affine_rank(const std::vector<LatticeVector>& points) {
  if (points.size() <= 1) return 0;
  std::vector<LatticeVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return rank(diffs);
}

}  // namespace

// ---------------------------------------------------------------- face lattice

FaceLattice::FaceLattice(std::size_t dim, std::size_t num_vertices, const std::vector<VertexSet>& facets)
    : dim_(dim), faces_(dim + 2), covers_(dim + 2) {
  VertexSet all(num_vertices);
  all.set();
  faces_[dim + 1].push_back(all);
  covers_[dim + 1].resize(1);
  if (dim >= 1) {
    for (std::size_t f = 0; f < facets.size(); ++f) {
      faces_[dim].push_back(facets[f]);
      covers_[dim + 1][0].push_back(f);
    }
    covers_[dim].resize(facets.size());
  }
  // Faces one dimension down are the maximal proper intersections with facets.
  // Index i of faces_ holds faces of dimension i-1; descend until edges (index 2).
  for (std::size_t cur = dim; cur >= 3; --cur) {
    const std::size_t below = cur - 1;
    std::map<VertexSet, std::size_t> index;
    covers_[cur].assign(faces_[cur].size(), {});
    for (std::size_t i = 0; i < faces_[cur].size(); ++i) {
      const VertexSet& face = faces_[cur][i];
      std::vector<VertexSet> cands;
      for (const auto& g : facets) {
        VertexSet x = face & g;
        if (x == face || x.none()) continue;
        cands.push_back(std::move(x));
      }
      std::sort(cands.begin(), cands.end());
      cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
      for (std::size_t a = 0; a < cands.size(); ++a) {
        bool maximal = true;
        for (std::size_t b = 0; b < cands.size() && maximal; ++b)
          if (a != b && cands[a].is_proper_subset_of(cands[b])) maximal = false;
        if (!maximal) continue;
        auto [it, inserted] = index.emplace(cands[a], faces_[below].size());
        if (inserted) faces_[below].push_back(cands[a]);
        covers_[cur][i].push_back(it->second);
      }
    }
  }
  // Vertices (dimension 0) and the empty face.
  if (dim >= 1) {
    faces_[1].clear();
    for (std::size_t v = 0; v < num_vertices; ++v) {
      VertexSet s(num_vertices);
      s.set(v);
      faces_[1].push_back(s);
    }
    covers_[2].assign(faces_[2].size(), {});
    for (std::size_t i = 0; i < faces_[2].size(); ++i)
      for (std::size_t v = faces_[2][i].find_first(); v != VertexSet::npos; v = faces_[2][i].find_next(v))
        covers_[2][i].push_back(v);
  }
  covers_[1].assign(faces_[1].size(), std::vector<std::size_t>{0});
  faces_[0].push_back(VertexSet(num_vertices));
  covers_[0].resize(1);
}

std::vector<std::size_t> FaceLattice::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& level : faces_) f.push_back(level.size());
  return f;
}

// ---------------------------------------------------------------- lattice polytope

LatticePolytope LatticePolytope::hull(std::vector<LatticeVector> points) {
  check_dims(points);
  sort_unique(points);
  const std::size_t n = points[0].dim();
  LatticePolytope p;
  p.dim_ = n;
  p.cache_ = std::make_shared<Cache>();
  if (n == 0) {
    p.vertices_ = std::move(points);
    return p;
  }
  if (affine_rank(points) < n) fail(ErrorCode::kLowerDimensional, "points do not span a full-dimensional polytope");
  HalfspaceSystem sys = facets_of_points(points, n);
  for (const auto& pt : points) {
    std::vector<LatticeVector> normals;
    for (const auto& h : sys)
      if (h.evaluate(pt) == 0) normals.push_back(h.normal);
    if (normals.size() >= n && rank(normals) == n) p.vertices_.push_back(pt);
  }
  Cache& cache = *p.cache_;
  std::call_once(cache.facets_once, [&] {
    cache.incidence = incidence_of(sys, p.vertices_);
    cache.facets = std::move(sys);
  });
  return p;
}

LatticePolytope LatticePolytope::from_extreme_points(std::vector<LatticeVector> vertices) {
  check_dims(vertices);
  sort_unique(vertices);
  const std::size_t n = vertices[0].dim();
  if (affine_rank(vertices) < n) fail(ErrorCode::kLowerDimensional, "points do not span a full-dimensional polytope");
  LatticePolytope p;
  p.dim_ = n;
  p.vertices_ = std::move(vertices);
  p.cache_ = std::make_shared<Cache>();
  return p;
}

LatticePolytope LatticePolytope::from_halfspaces(const HalfspaceSystem& system) {
  const std::size_t n = system.dim;
  if (n == 0) fail(ErrorCode::kDimension, "halfspace system of dimension 0");
  std::vector<LatticeVector> rows;
  for (const auto& h : system) {
    if (h.normal.dim() != n) fail(ErrorCode::kDimension, "halfspace normal dimension mismatch");
    rows.push_back(h.normal.extended(h.offset));
  }
  LatticeVector s_row(n + 1);
  s_row[n] = 1;
  rows.push_back(s_row);
  std::vector<LatticeVector> vertices;
  for (const auto& ray : extreme_rays(rows, n + 1)) {
    if (ray[n] == 0) fail(ErrorCode::kDegenerateInput, "halfspace system is unbounded");
    LatticeVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!mpz_divisible_p(ray[i].get_mpz_t(), ray[n].get_mpz_t()))
        fail(ErrorCode::kValidity, "halfspace system has a non-integral vertex");
      v[i] = ray[i] / ray[n];
    }
    vertices.push_back(std::move(v));
  }
  return from_extreme_points(std::move(vertices));
}

std::optional<std::size_t> LatticePolytope::vertex_index(const LatticeVector& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || !(*it == v)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

void LatticePolytope::ensure_facets() const {
  if (!cache_) fail(ErrorCode::kDegenerateInput, "empty polytope");
  std::call_once(cache_->facets_once, [this] {
    cache_->facets = facets_of_points(vertices_, dim_);
    cache_->incidence = incidence_of(cache_->facets, vertices_);
  });
}

const HalfspaceSystem& LatticePolytope::facets() const {
  ensure_facets();
  return cache_->facets;
}

const std::vector<VertexSet>& LatticePolytope::facet_incidence() const {
  ensure_facets();
  return cache_->incidence;
}

const FaceLattice& LatticePolytope::face_lattice() const {
  ensure_facets();
  std::call_once(cache_->lattice_once,
                 [this] { cache_->lattice = FaceLattice(dim_, vertices_.size(), cache_->incidence); });
  return cache_->lattice;
}

std::vector<std::pair<std::size_t, std::size_t>> LatticePolytope::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (dim_ == 0) return out;
  for (const auto& e : face_lattice().faces(1)) {
    const std::size_t a = e.find_first();
    const std::size_t b = e.find_next(a);
    out.emplace_back(a, b);
  }
  return out;
}

std::vector<std::size_t> LatticePolytope::vertex_degrees() const {
  std::vector<std::size_t> deg(vertices_.size(), 0);
  for (auto [a, b] : edges()) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

bool LatticePolytope::contains(const LatticeVector& x) const {
  for (const auto& h : facets())
    if (h.evaluate(x) < 0) return false;
  return true;
}

bool LatticePolytope::contains_strictly(const LatticeVector& x) const {
  for (const auto& h : facets())
    if (h.evaluate(x) <= 0) return false;
  return true;
}

// ---------------------------------------------------------------- rational polytope

RationalPolytope RationalPolytope::hull(const std::vector<RationalVector>& points) {
  if (points.empty()) fail(ErrorCode::kDegenerateInput, "empty point set");
  Integer l = 1;
  for (const auto& p : points) {
    const Integer d = p.denominator_lcm();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<LatticeVector> scaled;
  for (const auto& p : points) {
    LatticeVector v(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) {
      Rational x = p[i] * l;
      v[i] = x.get_num();
    }
    scaled.push_back(std::move(v));
  }
  LatticePolytope lp = LatticePolytope::hull(std::move(scaled));
  RationalPolytope out;
  Integer l2 = 1;
  for (const auto& v : lp.vertices()) {
    std::vector<Rational> c;
    for (const auto& x : v) c.emplace_back(x, l);
    RationalVector rv(std::move(c));
    const Integer d = rv.denominator_lcm();
    mpz_lcm(l2.get_mpz_t(), l2.get_mpz_t(), d.get_mpz_t());
    out.vertices_.push_back(std::move(rv));
  }
  std::sort(out.vertices_.begin(), out.vertices_.end());
  out.scale_ = l2;
  if (l2 == l) {
    out.scaled_ = lp;
  } else {
    std::vector<LatticeVector> re;
    for (const auto& v : out.vertices_) {
      LatticeVector w(v.dim());
      for (std::size_t i = 0; i < v.dim(); ++i) {
        Rational x = v[i] * l2;
        w[i] = x.get_num();
      }
      re.push_back(std::move(w));
    }
    out.scaled_ = LatticePolytope::from_extreme_points(std::move(re));
  }
  return out;
}

RationalPolytope RationalPolytope::from_lattice(const LatticePolytope& p) {
  RationalPolytope out;
  for (const auto& v : p.vertices()) out.vertices_.emplace_back(v);
  out.scale_ = 1;
  out.scaled_ = p;
  return out;
}

LatticePolytope RationalPolytope::to_lattice() const {
  if (!is_integral()) fail(ErrorCode::kPrecondition, "polytope has non-integral vertices");
  return scaled_;
}

// ---------------------------------------------------------------- free functions

LatticePolytope hull(std::vector<LatticeVector> points) { return LatticePolytope::hull(std::move(points)); }
const HalfspaceSystem& facets(const LatticePolytope& p) { return p.facets(); }
const FaceLattice& face_lattice(const LatticePolytope& p) { return p.face_lattice(); }
std::vector<std::size_t> f_vector(const LatticePolytope& p) { return p.face_lattice().f_vector(); }

namespace {

RationalPolytope dual_from_facets(const HalfspaceSystem& sys, const Integer& scale) {
  std::vector<RationalVector> pts;
  for (const auto& h : sys) {
    if (h.offset <= 0) fail(ErrorCode::kPrecondition, "origin is not strictly interior");
    std::vector<Rational> c;
    for (const auto& a : h.normal) {
      Rational x(-a * scale, h.offset);
      x.canonicalize();
      c.push_back(x);
    }
    pts.emplace_back(std::move(c));
  }
  return RationalPolytope::hull(pts);
}

}  // namespace

RationalPolytope polar_dual(const LatticePolytope& p) { return dual_from_facets(p.facets(), 1); }

RationalPolytope polar_dual(const RationalPolytope& p) { return dual_from_facets(p.scaled().facets(), p.scale()); }

bool is_integral(const LatticePolytope&) { return true; }
bool is_integral(const RationalPolytope& p) { return p.is_integral(); }

bool is_simple(const LatticePolytope& p) {
  const auto& inc = p.facet_incidence();
  std::vector<std::size_t> count(p.num_vertices(), 0);
  for (const auto& f : inc)
    for (std::size_t v = f.find_first(); v != VertexSet::npos; v = f.find_next(v)) ++count[v];
  return std::all_of(count.begin(), count.end(), [&](std::size_t c) { return c == p.dim(); });
}

bool is_simplicial(const LatticePolytope& p) {
  const auto& inc = p.facet_incidence();
  return std::all_of(inc.begin(), inc.end(), [&](const VertexSet& f) { return f.count() == p.dim(); });
}

bool is_delzant(const LatticePolytope& p) {
  if (!is_simple(p)) return false;
  const std::size_t n = p.dim();
  std::vector<std::vector<LatticeVector>> dirs(p.num_vertices());
  const auto& vs = p.vertices();
  for (auto [a, b] : p.edges()) {
    dirs[a].push_back(primitive(vs[b] - vs[a]));
    dirs[b].push_back(primitive(vs[a] - vs[b]));
  }
  for (const auto& d : dirs) {
    if (d.size() != n) return false;
    const Integer det = determinant(IntegerMatrix::from_columns(d));
    if (det != 1 && det != -1) return false;
  }
  return true;
}

bool is_toric_diagram(const LatticePolytope& p) {
  if (!is_simplicial(p)) return false;
  const auto& sys = p.facets();
  const auto& inc = p.facet_incidence();
  for (std::size_t f = 0; f < sys.size(); ++f) {
    // u sits at lattice distance 1 from the facet hyperplane.
    LatticeVector u = (1 - sys[f].offset) * bezout_vector(sys[f].normal);
    std::vector<LatticeVector> cols;
    for (std::size_t v = inc[f].find_first(); v != VertexSet::npos; v = inc[f].find_next(v))
      cols.push_back(p.vertices()[v] - u);
    const Integer det = determinant(IntegerMatrix::from_columns(cols));
    if (det != 1 && det != -1) return false;
  }
  return true;
}

std::optional<GorensteinData> gorenstein_index(const LatticePolytope& p) {
  const auto& sys = p.facets();
  const std::size_t n = p.dim();
  RationalMatrix a(sys.size(), std::vector<Rational>(n));
  for (std::size_t f = 0; f < sys.size(); ++f)
    for (std::size_t i = 0; i < n; ++i) a[f][i] = sys[f].normal[i];
  for (int r = 1; r <= static_cast<int>(n) + 1; ++r) {
    std::vector<Rational> b(sys.size());
    // normal·w + r·offset = 1 puts w at lattice distance 1 from every facet of r·P.
    for (std::size_t f = 0; f < sys.size(); ++f) b[f] = Rational(1 - sys[f].offset * r);
    auto w = solve_rational(a, b);
    if (!w) continue;
    bool integral = std::all_of(w->begin(), w->end(), [](const Rational& x) { return x.get_den() == 1; });
    if (!integral) continue;
    GorensteinData out;
    out.index = r;
    out.interior_point = RationalVector(*w).to_lattice();
    return out;
  }
  return std::nullopt;
}

bool is_reflexive(const LatticePolytope& p) {
  auto g = gorenstein_index(p);
  return g && g->index == 1;
}

LatticePolytope dilate(const LatticePolytope& p, const Integer& t) {
  if (t <= 0) fail(ErrorCode::kPrecondition, "dilation factor must be positive");
  std::vector<LatticeVector> vs;
  for (const auto& v : p.vertices()) vs.push_back(t * v);
  return LatticePolytope::from_extreme_points(std::move(vs));
}

LatticePolytope translate(const LatticePolytope& p, const LatticeVector& v) {
  std::vector<LatticeVector> vs;
  for (const auto& x : p.vertices()) vs.push_back(x + v);
  return LatticePolytope::from_extreme_points(std::move(vs));
}

LatticePolytope transform(const LatticePolytope& p, const AffineUnimodularMap& map) {
  if (map.dim() != p.dim()) fail(ErrorCode::kDimension, "map and polytope dimension mismatch");
  return LatticePolytope::from_extreme_points(map.apply(p.vertices()));
}

LatticePolytope project_prefix(const LatticePolytope& p, std::size_t k) {
  if (k == p.dim()) return p;
  if (k == 0 || k > p.dim()) fail(ErrorCode::kDimension, "projection dimension out of range");
  std::vector<LatticeVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(v.prefix(k));
  return LatticePolytope::hull(std::move(pts));
}

}  // namespace toric
