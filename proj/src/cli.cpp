#include "toric/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <istream>
#include <optional>

#include "toric/acceptance.hpp"
#include "toric/cactus.hpp"
#include "toric/constructions.hpp"
#include "toric/ehrhart.hpp"
#include "toric/equivalence.hpp"
#include "toric/errors.hpp"
#include "toric/lattice_count.hpp"
#include "toric/roots.hpp"

namespace toric::cli {

namespace {

struct Context {
  std::istream& in;
  bool verification_failed = false;
};

Json load(Context& ctx, const std::string& path) { return parse_json(read_input(path, ctx.in), path); }

LatticePolytope load_polytope(Context& ctx, const std::string& path) { return polytope_from_json(load(ctx, path)); }

Json betti_json(const BettiSequence& b) {
  Json out;
  Json cb = Json::array();
  for (const auto& v : b.values) cb.push_back(integer_json(v));
  out["cb"] = std::move(cb);
  out["tail"] = integer_json(b.tail);
  return out;
}

Json cmd_ehrhart(Context& ctx, const std::string& file) {
  const LatticePolytope p = load_polytope(ctx, file);
  const EhrhartPolynomial poly = ehrhart(p);
  const std::size_t n = p.dim();
  Json out;
  out["dim"] = n;
  out["hstar"] = hstar_to_json(poly.hstar());
  Json terms = Json::array();
  for (std::size_t k = 0; k <= n; ++k) {
    Json term;
    term["k"] = k;
    term["coefficient"] = integer_json(poly.hstar().coeffs()[k]);
    term["binomial"] = "C(t+" + std::to_string(n - k) + "," + std::to_string(n) + ")";
    terms.push_back(std::move(term));
  }
  out["binomial_basis"] = std::move(terms);
  Json mono = Json::array();
  for (const auto& c : poly.monomial_coefficients()) mono.push_back(to_string(c));
  out["monomial_coefficients"] = std::move(mono);
  Json values = Json::array();
  for (long t = 0; t <= static_cast<long>(n) + 2; ++t) values.push_back(integer_json(poly.evaluate(t)));
  out["values"] = std::move(values);
  out["hibi_palindromic"] = hibi_palindromic(poly.hstar());
  if (auto g = gorenstein_index(p)) {
    out["gorenstein_index"] = g->index;
  } else {
    out["gorenstein_index"] = nullptr;
  }
  out["betti"] = betti_json(contact_betti(poly.hstar()));
  return out;
}

Json cmd_hstar(Context& ctx, const std::string& file) {
  const LatticePolytope p = load_polytope(ctx, file);
  Json out;
  out["dim"] = p.dim();
  out["hstar"] = hstar_to_json(ehrhart(p).hstar());
  return out;
}

Json cmd_betti(Context& ctx, const std::string& file, int quotient_r) {
  const LatticePolytope p = load_polytope(ctx, file);
  const HStarVector h = ehrhart(p).hstar();
  Json out = betti_json(contact_betti(h));
  if (quotient_r > 0) {
    Json q = Json::array();
    for (long i = 0; i <= static_cast<long>(p.dim()) + 2; ++i) q.push_back(integer_json(betti_from_quotient(h, quotient_r, i)));
    out["quotient_r"] = quotient_r;
    out["quotient_cb"] = std::move(q);
  }
  return out;
}

Json cmd_dual(Context& ctx, const std::string& file) {
  return rational_polytope_to_json(polar_dual(load_polytope(ctx, file)));
}

Json cmd_preq(Context& ctx, const std::string& file) {
  const Json doc = load(ctx, file);
  const Json& body = unwrap_payload(doc);
  const PrequantizationResult r = body.is_object() && body.contains("halfspaces")
                                      ? prequantize(halfspaces_from_json(body))
                                      : prequantize(polytope_from_json(body));
  Json out;
  out["diagram"] = polytope_to_json(r.diagram);
  Json c = Json::array();
  for (const auto& x : r.c) c.push_back(integer_json(x));
  out["c"] = std::move(c);
  out["gorenstein_index"] = r.index;
  out["transform"] = map_to_json(r.transform);
  return out;
}

struct FamilyArgs {
  std::string kind;
  std::size_t n = 0;
  long k = 0;
  long lo = -1;
  long hi = 1;
  std::string bott_file;
  int bott_example = 0;
  bool moment = false;
};

Json cmd_family(Context& ctx, const FamilyArgs& a) {
  LatticePolytope p;
  if (a.kind == "cube") {
    p = cube(a.n, a.lo, a.hi);
  } else if (a.kind == "cross") {
    p = cross_polytope(a.n);
  } else if (a.kind == "smallcross") {
    p = small_cross_polytope(a.n);
  } else if (a.kind == "simplex") {
    p = standard_simplex(a.n);
  } else if (a.kind == "Pk") {
    p = family_Pk(a.n, a.k);
  } else if (a.kind == "Pkhalf") {
    p = family_Pk_half(a.n, a.k);
  } else if (a.kind == "Tk") {
    p = family_Tk(a.n, a.k);
  } else if (a.kind == "Dk") {
    p = family_Dk(a.n, a.k);
  } else {
    BottMatrix b;
    if (!a.bott_file.empty()) {
      b = bott_from_json(load(ctx, a.bott_file));
    } else {
      const auto examples = monotone_bott_examples();
      if (a.bott_example < 1 || a.bott_example > static_cast<int>(examples.size()))
        fail(ErrorCode::kPrecondition, "bott needs --bott-matrix or --bott-example 1..5");
      b = examples[static_cast<std::size_t>(a.bott_example - 1)];
    }
    p = a.moment ? bott_moment_polytope(b) : bott_diagram(b);
  }
  return polytope_to_json(p);
}

Json cmd_enumerate(std::size_t n, bool realize_them, bool count_only) {
  Json out;
  out["n"] = n;
  if (count_only) {
    out["count"] = integer_json(count_cacti(n));
    return out;
  }
  const auto cacti = enumerate_cacti(n);
  out["count"] = integer_json(Integer(static_cast<unsigned long>(cacti.size())));
  Json list = Json::array();
  for (const auto& c : cacti) {
    Json e;
    e["code"] = canonical_code(c);
    e["cactus"] = cactus_to_json(c);
    if (realize_them) e["diagram"] = polytope_to_json(realize(c));
    list.push_back(std::move(e));
  }
  out["cacti"] = std::move(list);
  return out;
}

Json cmd_realize(Context& ctx, const std::string& file, bool breadth_first) {
  const CactusNode c = cactus_from_json(load(ctx, file));
  return polytope_to_json(realize(c, breadth_first ? Extension::kBreadthFirst : Extension::kDepthFirst));
}

Json cmd_extract(Context& ctx, const std::string& file) {
  const CactusNode c = extract_cactus(load_polytope(ctx, file));
  Json out;
  out["code"] = canonical_code(c);
  out["triangles"] = triangle_count(c);
  out["cactus"] = cactus_to_json(c);
  return out;
}

Json cmd_equiv(Context& ctx, const std::string& a, const std::string& b) {
  const LatticePolytope p = load_polytope(ctx, a);
  const LatticePolytope q = load_polytope(ctx, b);
  const EquivalenceWitness w = unimodular_equivalent(p, q);
  Json out;
  out["verdict"] = w.equivalent ? "equivalent" : "inequivalent";
  if (w.map) out["map"] = map_to_json(*w.map);
  return out;
}

Json cmd_identify(Context& ctx, const std::string& file) {
  const LatticePolytope p = load_polytope(ctx, file);
  Json out;
  Json reasons;
  try {
    const FamilyIdentification id = identify_Dk(p);
    out["family"] = "D_k";
    out["n"] = p.dim();
    out["k"] = id.k;
    out["map"] = map_to_json(id.map);
    return out;
  } catch (const ToricError& e) {
    if (e.code() == ErrorCode::kInternal) throw;
    reasons["D_k"] = e.what();
  }
  const EquivalenceWitness w = is_small_cross(p);
  if (w.equivalent) {
    out["family"] = "small_cross";
    out["n"] = p.dim();
    out["map"] = map_to_json(*w.map);
    return out;
  }
  reasons["small_cross"] = "failed step: " + w.failed_step;
  out["family"] = "none";
  out["reasons"] = std::move(reasons);
  return out;
}

Json cmd_roots(Context& ctx, const std::string& file, std::optional<double> target, double tol) {
  const EhrhartPolynomial poly = ehrhart(load_polytope(ctx, file));
  const RootReport r = root_real_parts(poly, target.value_or(0.0), tol);
  Json out;
  Json roots = Json::array();
  for (const auto& z : r.roots) roots.push_back(Json{{"re", z.real()}, {"im", z.imag()}});
  out["roots"] = std::move(roots);
  if (target) {
    out["target"] = r.target;
    out["tolerance"] = r.tolerance;
    out["max_deviation"] = r.max_deviation;
    out["verdict"] = r.verdict;
    if (!r.verdict) ctx.verification_failed = true;
  }
  return out;
}

Json cmd_verify(Context& ctx, const std::string& suite) {
  Json out;
  Json list = Json::array();
  bool all = true;
  for (const auto& r : run_acceptance(suite)) {
    all = all && r.passed;
    list.push_back(Json{{"id", r.id}, {"suite", r.suite}, {"passed", r.passed}, {"detail", r.detail}});
  }
  out["suite"] = suite;
  out["passed"] = all;
  out["criteria"] = std::move(list);
  if (!all) ctx.verification_failed = true;
  return out;
}

Json error_payload(const std::string& code, const std::string& message) {
  Json out;
  out["code"] = code;
  out["message"] = message;
  return out;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args, std::istream& in) {
  const auto t0 = std::chrono::steady_clock::now();
  CommandResult result;
  Context ctx{in};

  CLI::App app{"Exact lattice polytope and toric diagram toolkit", "toric"};
  app.require_subcommand(1);
  int threads = 0;
  bool pretty = false;
  app.add_option("--threads", threads, "Cap on worker threads")->check(CLI::NonNegativeNumber);
  app.add_flag("--pretty", pretty, "Indent the JSON output");

  std::function<Json()> action;
  std::string file, file_b, suite = "all";

  auto file_cmd = [&](const char* name, const char* help, std::function<Json()> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Polytope JSON file, or - for stdin")->required();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  file_cmd("ehrhart", "h*, binomial-basis Ehrhart polynomial and Betti table", [&] { return cmd_ehrhart(ctx, file); });
  file_cmd("hstar", "h*-vector", [&] { return cmd_hstar(ctx, file); });
  int quotient_r = 0;
  file_cmd("betti", "Contact Betti numbers", [&] { return cmd_betti(ctx, file, quotient_r); })
      ->add_option("--quotient-r", quotient_r, "Also evaluate the quotient formula with this r")
      ->check(CLI::PositiveNumber);
  file_cmd("dual", "Polar dual", [&] { return cmd_dual(ctx, file); });
  file_cmd("preq", "Prequantization of a Delzant polytope (vertex or halfspace JSON)",
           [&] { return cmd_preq(ctx, file); });

  FamilyArgs fam;
  CLI::App* family = app.add_subcommand("family", "Built-in polytopes");
  family->add_option("--kind", fam.kind, "Family name")
      ->required()
      ->check(CLI::IsMember({"cube", "cross", "smallcross", "simplex", "Pk", "Pkhalf", "Tk", "Dk", "bott"}));
  family->add_option("--n", fam.n, "Dimension");
  family->add_option("--k", fam.k, "Family parameter");
  family->add_option("--lo", fam.lo, "Cube lower bound");
  family->add_option("--hi", fam.hi, "Cube upper bound");
  family->add_option("--bott-matrix", fam.bott_file, "Bott matrix JSON");
  family->add_option("--bott-example", fam.bott_example, "Built-in Bott matrix 1..5");
  family->add_flag("--moment", fam.moment, "Bott moment polytope instead of the diagram");
  family->callback([&] { action = [&] { return cmd_family(ctx, fam); }; });

  std::size_t cactus_n = 0;
  bool realize_flag = false, count_only = false;
  CLI::App* en = app.add_subcommand("enumerate-cacti", "Rooted 3-cacti with n triangles");
  en->add_option("--n", cactus_n, "Number of triangles")->required()->check(CLI::PositiveNumber);
  en->add_flag("--realize", realize_flag, "Attach the realized toric diagrams");
  en->add_flag("--count-only", count_only, "Count with the recurrence only");
  en->callback([&] { action = [&] { return cmd_enumerate(cactus_n, realize_flag, count_only); }; });

  bool breadth_first = false;
  file_cmd("realize", "Toric diagram of a cactus", [&] { return cmd_realize(ctx, file, breadth_first); })
      ->add_flag("--breadth-first", breadth_first, "Use the breadth-first attachment order");
  file_cmd("extract", "Cactus of a diagram", [&] { return cmd_extract(ctx, file); });

  CLI::App* eq = app.add_subcommand("equiv", "Unimodular equivalence with witness");
  eq->add_option("a", file, "First polytope")->required();
  eq->add_option("b", file_b, "Second polytope")->required();
  eq->callback([&] { action = [&] { return cmd_equiv(ctx, file, file_b); }; });

  file_cmd("identify", "Recognize D_k or the small cross-polytope", [&] { return cmd_identify(ctx, file); });

  double target = 0.0, tol = 1e-9;
  CLI::Option* target_opt = nullptr;
  CLI::App* roots = file_cmd("roots", "Roots of the Ehrhart polynomial", [&] {
    return cmd_roots(ctx, file, target_opt->count() ? std::optional<double>(target) : std::nullopt, tol);
  });
  target_opt = roots->add_option("--target", target, "Expected common real part");
  roots->add_option("--tol", tol, "Tolerance for the real parts");

  CLI::App* verify = app.add_subcommand("verify", "Replay acceptance checks");
  verify->add_option("--suite", suite, "Suite name or all")->check([](const std::string& s) {
    const auto& names = acceptance_suites();
    return s == "all" || std::find(names.begin(), names.end(), s) != names.end() ? std::string()
                                                                                  : "unknown suite " + s;
  });
  verify->callback([&] { action = [&] { return cmd_verify(ctx, suite); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    result.pretty = pretty;
    if (threads > 0) set_worker_threads(threads);
    result.payload = action();
    result.status = ctx.verification_failed ? "failed" : "ok";
    result.exit_code = ctx.verification_failed ? kVerificationFailed : kOk;
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    result.status = "ok";
    result.payload = Json{{"help", subs.empty() ? app.help() : subs.back()->help()}};
  } catch (const CLI::ParseError& e) {
    result.status = "error";
    result.payload = error_payload("usage_error", e.what());
    result.exit_code = kUsage;
  } catch (const ToricError& e) {
    result.status = "error";
    result.payload = error_payload(std::string(error_code_name(e.code())), e.what());
    result.exit_code = kDomainError;
  }
  result.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

std::string render(const CommandResult& result) {
  Json doc;
  doc["status"] = result.status;
  doc["payload"] = result.payload;
  doc["elapsed_ms"] = result.elapsed_ms;
  return doc.dump(result.pretty ? 2 : -1);
}

}  // namespace toric::cli
