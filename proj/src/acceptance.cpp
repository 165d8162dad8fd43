#include "toric/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "toric/cactus.hpp"
#include "toric/constructions.hpp"
#include "toric/ehrhart.hpp"
#include "toric/equivalence.hpp"
#include "toric/errors.hpp"
#include "toric/lattice_count.hpp"
#include "toric/roots.hpp"

namespace toric {

namespace {

class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    if (failures_++ < 5) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  bool ok() const { return failures_ == 0; }
  std::string detail() const {
    if (ok()) return std::to_string(checks_) + " checks";
    return std::to_string(failures_) + "/" + std::to_string(checks_) + " failed: " + notes_.str();
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::ostringstream notes_;
};

using Coeffs = std::vector<Integer>;

// Pascal row C(m, 0..m) padded with zeros to length len.
Coeffs pascal_row(std::size_t m, std::size_t len) {
  Coeffs row{1};
  for (std::size_t i = 0; i < m; ++i) {
    Coeffs next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  row.resize(std::max(len, row.size()), 0);
  return row;
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Coeffs trimmed(Coeffs c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

std::string show(const Coeffs& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + to_string(c[i]);
  return s + ")";
}

// Applies the map coordinatewise and compares vertex sets without going through verify_witness.
bool maps_onto(const LatticePolytope& from, const LatticePolytope& to, const AffineUnimodularMap& m) {
  if (determinant(m.linear()) * determinant(m.linear()) != 1) return false;
  std::set<LatticeVector> image;
  for (const auto& v : from.vertices()) {
    LatticeVector y(v.dim());
    for (std::size_t r = 0; r < v.dim(); ++r) {
      y[r] = m.translation()[r];
      for (std::size_t c = 0; c < v.dim(); ++c) y[r] += m.linear()(r, c) * v[c];
    }
    image.insert(y);
  }
  return image == std::set<LatticeVector>(to.vertices().begin(), to.vertices().end());
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Values of the rooted 3-cactus count for n = 1..15.
const long kTable1[] = {1, 2, 5, 13, 37, 111, 345, 1105, 3624, 12099, 41000, 140647, 487440, 1704115, 6002600};

void table1(Tally& t) {
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t n = 1; n <= 10; ++n) {
    const std::size_t got = enumerate_cacti(n).size();
    t.expect(got == static_cast<std::size_t>(kTable1[n - 1]),
             "enumerate(" + std::to_string(n) + ") = " + std::to_string(got));
    std::set<std::string> codes;
    for (const auto& c : enumerate_cacti(n)) codes.insert(canonical_code(c));
    t.expect(codes.size() == got, "duplicate codes at n = " + std::to_string(n));
    t.expect(count_cacti(n) == kTable1[n - 1], "count(" + std::to_string(n) + ") disagrees with enumeration");
  }
  const double enum_seconds = seconds_since(t0);
  t.expect(enum_seconds < 60.0, "enumeration took " + std::to_string(enum_seconds) + " s");
  const auto t1 = std::chrono::steady_clock::now();
  for (std::size_t n = 11; n <= 15; ++n)
    t.expect(count_cacti(n) == kTable1[n - 1], "count(" + std::to_string(n) + ") = " + to_string(count_cacti(n)));
  t.expect(seconds_since(t1) < 600.0, "count-only recurrence exceeded 10 min");
}

void hstar_cross(Tally& t) {
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t n = 1; n <= 7; ++n) {
    const Coeffs cross = ehrhart(cross_polytope(n)).hstar().coeffs();
    t.expect(cross == pascal_row(n, n + 1), "h*(cross " + std::to_string(n) + ") = " + show(cross));
    const Coeffs small = ehrhart(small_cross_polytope(n)).hstar().coeffs();
    t.expect(small == pascal_row(n - 1, n + 1), "h*(small cross " + std::to_string(n) + ") = " + show(small));
  }
  t.expect(seconds_since(t0) < 120.0, "h* counting exceeded 2 min");
}

void prequantization(Tally& t) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::string sn = std::to_string(n);
    const auto big = prequantize(cube(n, -1, 1));
    const auto w1 = unimodular_equivalent(big.diagram, cross_polytope(n));
    t.expect(w1.equivalent && w1.map && maps_onto(big.diagram, cross_polytope(n), *w1.map),
             "prequantize([-1,1]^" + sn + ") not equivalent to the cross-polytope");
    const auto unit = prequantize(cube(n, 0, 1));
    const auto w2 = unimodular_equivalent(unit.diagram, small_cross_polytope(n));
    t.expect(w2.equivalent && w2.map && maps_onto(unit.diagram, small_cross_polytope(n), *w2.map),
             "prequantize([0,1]^" + sn + ") not equivalent to the small cross-polytope");
  }
}

void series(Tally& t) {
  const Coeffs one_plus_z{1, 1};
  auto check = [&](const LatticePolytope& d, const LatticePolytope& d2, const std::string& label) {
    const HStarVector h = ehrhart(d).hstar();
    const HStarVector h2 = ehrhart(d2).hstar();
    t.expect(trimmed(h.coeffs()) == trimmed(poly_mul(one_plus_z, h2.coeffs())), label + ": h* != (1+z)·h*'");
    t.expect(series_product_check(h, h2, 2, 1), label + ": series_product_check rejected");
  };
  for (std::size_t n = 1; n <= 6; ++n) check(cross_polytope(n), small_cross_polytope(n), "n=" + std::to_string(n));
  for (std::size_t n = 2; n <= 6; ++n)
    for (long k = static_cast<long>(n % 2); k < static_cast<long>(n); k += 2)
      check(family_Tk(n, k), family_Dk(n, k), "T/D n=" + std::to_string(n) + " k=" + std::to_string(k));
}

void family(Tally& t) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const std::string sn = std::to_string(n);
    Coeffs tk(n + 1, 2), dk(n + 1, 1);
    tk.front() = tk.back() = 1;
    dk.back() = 0;
    std::vector<LatticePolytope> ts, ds;
    for (long k = 0; k < static_cast<long>(n); ++k) {
      ts.push_back(family_Tk(n, k));
      t.expect(ehrhart(ts.back()).hstar().coeffs() == tk, "h*(T_" + std::to_string(k) + "), n=" + sn);
      if ((static_cast<long>(n) - k) % 2 == 0) {
        ds.push_back(family_Dk(n, k));
        t.expect(ehrhart(ds.back()).hstar().coeffs() == dk, "h*(D_" + std::to_string(k) + "), n=" + sn);
      }
    }
    for (const auto* list : {&ts, &ds})
      for (std::size_t i = 0; i < list->size(); ++i)
        for (std::size_t j = i + 1; j < list->size(); ++j)
          t.expect(!unimodular_equivalent((*list)[i], (*list)[j]).equivalent,
                   "distinct family members equivalent, n=" + sn);
  }
}

void classification(Tally& t) {
  std::mt19937_64 rng(20240611);
  for (std::size_t n = 2; n <= 6; ++n)
    for (long k = static_cast<long>(n % 2); k < static_cast<long>(n); k += 2) {
      const LatticePolytope dk = family_Dk(n, k);
      int recovered = 0;
      for (int trial = 0; trial < 100; ++trial) {
        const LatticePolytope img = transform(dk, random_affine_unimodular(n, rng));
        const auto id = identify_Dk(img);
        if (id.k == k && maps_onto(img, dk, id.map)) ++recovered;
      }
      t.expect(recovered == 100, "identify_Dk n=" + std::to_string(n) + " k=" + std::to_string(k) + " recovered " +
                                     std::to_string(recovered) + "/100");
    }
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::string sn = std::to_string(n);
    const LatticePolytope sc = small_cross_polytope(n);
    int accepted = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const LatticePolytope img = transform(sc, random_affine_unimodular(n, rng));
      const auto w = is_small_cross(img);
      if (w.equivalent && w.map && maps_onto(img, sc, *w.map)) ++accepted;
    }
    t.expect(accepted == 100, "is_small_cross accepted " + std::to_string(accepted) + "/100 at n=" + sn);
    t.expect(!is_small_cross(cross_polytope(n)).equivalent, "is_small_cross accepted the cross-polytope, n=" + sn);
    for (const auto& c : enumerate_cacti(n))
      t.expect(!is_small_cross(realize(c)).equivalent, "is_small_cross accepted a realized cactus, n=" + sn);
  }
}

void bridge(Tally& t) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto cacti = enumerate_cacti(n);
    std::vector<LatticePolytope> diagrams;
    std::vector<std::string> codes;
    for (const auto& c : cacti) {
      diagrams.push_back(realize(c));
      codes.push_back(canonical_code(c));
    }
    std::size_t pairs = 0, disagreements = 0;
    for (std::size_t i = 0; i < cacti.size(); ++i)
      for (std::size_t j = i; j < cacti.size(); ++j) {
        ++pairs;
        const auto w = unimodular_equivalent(diagrams[i], diagrams[j]);
        const bool witnessed = w.equivalent && w.map && maps_onto(diagrams[i], diagrams[j], *w.map);
        if (w.equivalent != witnessed || witnessed != (codes[i] == codes[j])) ++disagreements;
      }
    t.expect(disagreements == 0, std::to_string(disagreements) + " disagreements at n=" + std::to_string(n));
    if (n == 4) t.expect(pairs == 91, "expected 91 pairs at n=4, got " + std::to_string(pairs));
  }
}

void bott(Tally& t) {
  const auto examples = monotone_bott_examples();
  t.expect(examples.size() == 5, "expected five matrices");
  std::vector<LatticePolytope> diagrams;
  for (const auto& b : examples) {
    t.expect(is_monotone_bott(b), "matrix fails the monotone conditions");
    diagrams.push_back(bott_diagram(b));
  }
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    t.expect(ehrhart_equivalent(diagrams[i], cross_polytope(3)), "Bott diagram not Ehrhart equivalent to cross");
    for (std::size_t j = i + 1; j < diagrams.size(); ++j)
      t.expect(!unimodular_equivalent(diagrams[i], diagrams[j]).equivalent, "two Bott diagrams are equivalent");
  }
  std::set<std::vector<LatticeVector>> bott_forms, cactus_forms;
  for (const auto& d : diagrams) bott_forms.insert(canonical_form(d));
  for (const auto& c : enumerate_cacti(3)) cactus_forms.insert(canonical_form(realize(c)));
  t.expect(bott_forms.size() == 5 && bott_forms == cactus_forms, "canonical forms differ from the n=3 cacti");
}

void betti(Tally& t) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const std::string sn = std::to_string(n);
    const Coeffs cross_row = pascal_row(n, n + 1);
    const Coeffs small_row = pascal_row(n - 1, n + 1);
    const HStarVector hc = ehrhart(cross_polytope(n)).hstar();
    const HStarVector hs = ehrhart(small_cross_polytope(n)).hstar();
    const BettiSequence bc = contact_betti(hc);
    const BettiSequence bs = contact_betti(hs);
    Integer ec = 0, es = 0;
    for (std::size_t k = 0; k <= n + 2; ++k) {
      if (k <= n) ec += cross_row[k];
      if (k >= 1 && k - 1 <= n - 1) es += small_row[k - 1];
      const long kk = static_cast<long>(k);
      t.expect(bc.at(kk) == ec, "cross cb_" + std::to_string(2 * k) + ", n=" + sn);
      t.expect(bs.at(kk) == es, "small cross cb_" + std::to_string(2 * k) + ", n=" + sn);
      t.expect(betti_from_quotient(hc, 2, kk) == bs.at(kk), "quotient formula cross->small cross, n=" + sn);
    }
    if (n < 2) continue;
    for (long k = static_cast<long>(n % 2); k < static_cast<long>(n); k += 2) {
      const HStarVector ht = ehrhart(family_Tk(n, k)).hstar();
      const BettiSequence bd = contact_betti(ehrhart(family_Dk(n, k)).hstar());
      for (long i = 0; i <= static_cast<long>(n) + 2; ++i) {
        t.expect(bd.at(i) == std::min<long>(i, static_cast<long>(n)), "D_k cb_" + std::to_string(2 * i) + ", n=" + sn);
        t.expect(betti_from_quotient(ht, 2, i) == bd.at(i), "quotient formula T_k->D_k, n=" + sn);
      }
    }
  }
}

void roots(Tally& t) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const std::string sn = std::to_string(n);
    const RootReport s = root_real_parts(ehrhart(small_cross_polytope(n)), -1.0, 1e-9);
    t.expect(s.verdict && s.roots.size() == n,
             "small cross n=" + sn + " deviation " + std::to_string(s.max_deviation));
    const RootReport c = root_real_parts(ehrhart(cross_polytope(n)), -0.5, 1e-9);
    t.expect(c.verdict && c.roots.size() == n, "cross n=" + sn + " deviation " + std::to_string(c.max_deviation));
  }
}

void oracle(Tally& t) {
  for (const auto& [name, p] : builtin_polytopes(4)) {
    const CountingPlan plan = make_counting_plan(p);
    for (long s = 1; s <= 3; ++s) {
      const auto [total, interior] = naive_count(p, s);
      const PointCounts serial = count_lattice_points_serial(plan, s);
      const PointCounts parallel = count_lattice_points_parallel(plan, s);
      const std::string label = name + " t=" + std::to_string(s);
      t.expect(serial.total == total && serial.interior == interior, label + ": serial counter disagrees");
      t.expect(parallel.total == total && parallel.interior == interior, label + ": parallel counter disagrees");
    }
    try {
      const EhrhartPolynomial poly = ehrhart(p);
      const long n = static_cast<long>(p.dim());
      for (long s = n + 1; s <= n + 2; ++s)
        t.expect(count_points(p, s) == poly.evaluate(s), name + ": self-check at t=" + std::to_string(s));
    } catch (const ToricError& e) {
      t.expect(false, name + ": " + e.what());
    }
  }
}

using SuiteFn = void (*)(Tally&);
const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"table1", table1},     {"hstar", hstar_cross},   {"prequantization", prequantization},
      {"series", series},     {"family", family},       {"classification", classification},
      {"bridge", bridge},     {"bott", bott},           {"betti", betti},
      {"roots", roots},       {"oracle", oracle}};
  return r;
}

}  // namespace

const std::vector<std::string>& acceptance_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CriterionResult> run_acceptance(const std::string& suite) {
  std::vector<CriterionResult> out;
  const auto& reg = registry();
  bool matched = false;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    if (suite != "all" && suite != reg[i].first) continue;
    matched = true;
    CriterionResult r;
    r.id = static_cast<int>(i + 1);
    r.suite = reg[i].first;
    const auto t0 = std::chrono::steady_clock::now();
    Tally tally;
    try {
      reg[i].second(tally);
      r.passed = tally.ok();
      r.detail = tally.detail();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = seconds_since(t0);
    out.push_back(std::move(r));
  }
  if (!matched) fail(ErrorCode::kPrecondition, "unknown suite '" + suite + "'");
  return out;
}

std::pair<Integer, Integer> naive_count(const LatticePolytope& p, long t) {
  const std::size_t n = p.dim();
  if (t == 0) return {1, n == 0 ? 1 : 0};
  std::vector<long> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer mn = p.vertices().front()[i], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min<Integer>(mn, v[i]);
      mx = std::max<Integer>(mx, v[i]);
    }
    lo[i] = to_int64(mn * t);
    hi[i] = to_int64(mx * t);
  }
  std::vector<std::vector<long>> normals;
  std::vector<long> offsets;
  for (const auto& h : p.facets()) {
    std::vector<long> a;
    for (const auto& x : h.normal) a.push_back(to_int64(x));
    normals.push_back(std::move(a));
    offsets.push_back(to_int64(h.offset * t));
  }
  long total = 0, interior = 0;
  std::vector<long> x = lo;
  while (true) {
    bool inside = true, strict = true;
    for (std::size_t f = 0; f < normals.size() && inside; ++f) {
      long v = offsets[f];
      for (std::size_t i = 0; i < n; ++i) v += normals[f][i] * x[i];
      if (v < 0) inside = false;
      if (v <= 0) strict = false;
    }
    if (inside) ++total;
    if (inside && strict) ++interior;
    std::size_t i = 0;
    for (; i < n && x[i] == hi[i]; ++i) x[i] = lo[i];
    if (i == n) break;
    ++x[i];
  }
  return {Integer(total), Integer(interior)};
}

std::vector<std::pair<std::string, LatticePolytope>> builtin_polytopes(std::size_t max_dim) {
  std::vector<std::pair<std::string, LatticePolytope>> out;
  for (std::size_t n = 1; n <= max_dim; ++n) {
    const std::string sn = std::to_string(n);
    out.emplace_back("cube[-1,1]^" + sn, cube(n, -1, 1));
    out.emplace_back("cube[0,1]^" + sn, cube(n, 0, 1));
    out.emplace_back("cross" + sn, cross_polytope(n));
    out.emplace_back("smallcross" + sn, small_cross_polytope(n));
    out.emplace_back("simplex" + sn, standard_simplex(n));
    if (n >= 2) {
      out.emplace_back("pyramid(smallcross" + std::to_string(n - 1) + ")", pyramid(small_cross_polytope(n - 1)));
      const LatticePolytope base = cube(n - 1, 0, 1);
      out.emplace_back("bipyramid(cube" + std::to_string(n - 1) + ")",
                       pseudo_bipyramid(base, LatticeVector(n - 1), LatticeVector::unit(n - 1, 0)));
      for (long k = 0; k < static_cast<long>(n); ++k) {
        const std::string sk = std::to_string(k);
        out.emplace_back("P" + sk + "_" + sn, family_Pk(n, k));
        out.emplace_back("T" + sk + "_" + sn, family_Tk(n, k));
        if ((static_cast<long>(n) - k) % 2 == 0) {
          out.emplace_back("Phalf" + sk + "_" + sn, family_Pk_half(n, k));
          out.emplace_back("D" + sk + "_" + sn, family_Dk(n, k));
        }
      }
    }
    for (const auto& c : enumerate_cacti(n)) out.emplace_back("cactus" + canonical_code(c), realize(c));
  }
  if (max_dim >= 3)
    for (const auto& b : monotone_bott_examples()) {
      out.emplace_back("bott_moment", bott_moment_polytope(b));
      out.emplace_back("bott_diagram", bott_diagram(b));
    }
  return out;
}

}  // namespace toric
