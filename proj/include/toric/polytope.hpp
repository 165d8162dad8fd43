#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

using VertexSet = boost::dynamic_bitset<>;

/// {x : normal·x + offset >= 0}
struct Halfspace {
  LatticeVector normal;
  Integer offset;

  Integer evaluate(const LatticeVector& x) const { return dot(normal, x) + offset; }
  friend bool operator==(const Halfspace& a, const Halfspace& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
  friend bool operator<(const Halfspace& a, const Halfspace& b) {
    if (a.normal == b.normal) return a.offset < b.offset;
    return a.normal < b.normal;
  }
};

struct HalfspaceSystem {
  std::size_t dim = 0;
  std::vector<Halfspace> halfspaces;

  std::size_t size() const { return halfspaces.size(); }
  const Halfspace& operator[](std::size_t i) const { return halfspaces[i]; }
  auto begin() const { return halfspaces.begin(); }
  auto end() const { return halfspaces.end(); }
};

/// Faces of a polytope graded by dimension -1..n, each stored as a vertex-index set.
class FaceLattice {
 public:
  FaceLattice() = default;
  /// Builds the lattice from the vertex-facet incidence by intersecting facets downward.
  FaceLattice(std::size_t dim, std::size_t num_vertices, const std::vector<VertexSet>& facets);

  std::size_t dim() const { return dim_; }
  const std::vector<VertexSet>& faces(int d) const { return faces_.at(static_cast<std::size_t>(d + 1)); }
  std::size_t count(int d) const { return faces(d).size(); }
  /// f_{-1}, f_0, ..., f_n.
  std::vector<std::size_t> f_vector() const;
  /// covers(d)[i] lists indices into faces(d-1) of the facets of faces(d)[i].
  const std::vector<std::vector<std::size_t>>& covers(int d) const {
    return covers_.at(static_cast<std::size_t>(d + 1));
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::vector<VertexSet>> faces_;
  std::vector<std::vector<std::vector<std::size_t>>> covers_;
};

/// Full-dimensional lattice polytope stored by its extreme points (sorted, deduplicated).
/// Facets and the face lattice are computed lazily and cached; copies share the cache.
class LatticePolytope {
 public:
  LatticePolytope() = default;

  /// Convex hull with interior points pruned. Throws kLowerDimensional when the
  /// points do not affinely span R^n.
  static LatticePolytope hull(std::vector<LatticeVector> points);
  /// Trusted constructor for callers that already know the extreme points.
  static LatticePolytope from_extreme_points(std::vector<LatticeVector> vertices);
  /// Vertex enumeration of an H-description. Throws kValidity when a vertex is not integral.
  static LatticePolytope from_halfspaces(const HalfspaceSystem& system);

  std::size_t dim() const { return dim_; }
  const std::vector<LatticeVector>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::optional<std::size_t> vertex_index(const LatticeVector& v) const;

  const HalfspaceSystem& facets() const;
  /// incidence[f] = vertices lying on facet f.
  const std::vector<VertexSet>& facet_incidence() const;
  const FaceLattice& face_lattice() const;
  /// Pairs of vertex indices spanning edges.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::vector<std::size_t> vertex_degrees() const;

  bool contains(const LatticeVector& x) const;
  bool contains_strictly(const LatticeVector& x) const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  struct Cache;
  void ensure_facets() const;

  std::size_t dim_ = 0;
  std::vector<LatticeVector> vertices_;
  std::shared_ptr<Cache> cache_;
};

/// Polytope with rational vertices, held internally as a lattice polytope scaled by the
/// least common denominator.
class RationalPolytope {
 public:
  RationalPolytope() = default;
  static RationalPolytope hull(const std::vector<RationalVector>& points);
  static RationalPolytope from_lattice(const LatticePolytope& p);

  std::size_t dim() const { return scaled_.dim(); }
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  const Integer& scale() const { return scale_; }
  /// The polytope scale()·Q, which has integral vertices.
  const LatticePolytope& scaled() const { return scaled_; }
  bool is_integral() const { return scale_ == 1; }
  /// Throws kPrecondition unless integral.
  LatticePolytope to_lattice() const;

  friend bool operator==(const RationalPolytope& a, const RationalPolytope& b) { return a.vertices_ == b.vertices_; }

 private:
  std::vector<RationalVector> vertices_;
  Integer scale_ = 1;
  LatticePolytope scaled_;
};

LatticePolytope hull(std::vector<LatticeVector> points);
const HalfspaceSystem& facets(const LatticePolytope& p);
const FaceLattice& face_lattice(const LatticePolytope& p);
std::vector<std::size_t> f_vector(const LatticePolytope& p);

/// {y : x·y <= 1 for all x in P}. Throws kPrecondition unless the origin is strictly interior.
RationalPolytope polar_dual(const LatticePolytope& p);
RationalPolytope polar_dual(const RationalPolytope& p);

bool is_integral(const LatticePolytope& p);
bool is_integral(const RationalPolytope& p);
bool is_simple(const LatticePolytope& p);
bool is_simplicial(const LatticePolytope& p);
bool is_delzant(const LatticePolytope& p);
bool is_toric_diagram(const LatticePolytope& p);

struct GorensteinData {
  int index = 0;
  /// The unique interior lattice point w of index·P; index·P - w is reflexive.
  LatticeVector interior_point;
};

/// Smallest r <= n+1 such that r·P is a lattice translate of a reflexive polytope.
std::optional<GorensteinData> gorenstein_index(const LatticePolytope& p);
bool is_reflexive(const LatticePolytope& p);

/// Throws kPrecondition for t <= 0.
LatticePolytope dilate(const LatticePolytope& p, const Integer& t);
LatticePolytope translate(const LatticePolytope& p, const LatticeVector& v);
LatticePolytope transform(const LatticePolytope& p, const AffineUnimodularMap& map);
/// Image under the coordinate projection onto the first k coordinates.
LatticePolytope project_prefix(const LatticePolytope& p, std::size_t k);

}  // namespace toric
