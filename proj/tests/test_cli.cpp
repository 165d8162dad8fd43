#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "toric/cactus.hpp"
#include "toric/cli.hpp"
#include "toric/constructions.hpp"
#include "toric/json_io.hpp"

namespace toric {
namespace {

cli::CommandResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  return cli::run(args, in);
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

TEST(Cli, FamilyPipedIntoEhrhart) {
  const auto fam = run_cli({"family", "--kind", "cross", "--n", "3"});
  ASSERT_EQ(fam.exit_code, cli::kOk);
  const auto eh = run_cli({"ehrhart", "-"}, cli::render(fam));
  ASSERT_EQ(eh.exit_code, cli::kOk) << eh.payload.dump();
  EXPECT_EQ(eh.payload["hstar"], Json::parse(R"(["1","3","3","1"])"));
  EXPECT_EQ(eh.payload["gorenstein_index"], 1);
  EXPECT_EQ(eh.payload["hibi_palindromic"], true);
  EXPECT_EQ(eh.payload["values"].size(), 6u);
}

TEST(Cli, EnvelopeShape) {
  const auto r = run_cli({"family", "--kind", "simplex", "--n", "2"});
  const Json doc = Json::parse(cli::render(r));
  EXPECT_EQ(doc["status"], "ok");
  EXPECT_TRUE(doc["elapsed_ms"].is_number());
  EXPECT_EQ(doc["payload"]["dim"], 2);
  EXPECT_EQ(doc["payload"]["vertices"].size(), 3u);
}

TEST(Cli, CountOnly) {
  const auto r = run_cli({"enumerate-cacti", "--n", "10", "--count-only"});
  ASSERT_EQ(r.exit_code, cli::kOk);
  EXPECT_EQ(r.payload["count"], "12099");
  const auto full = run_cli({"enumerate-cacti", "--n", "4"});
  EXPECT_EQ(full.payload["count"], "13");
  EXPECT_EQ(full.payload["cacti"].size(), 13u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).exit_code, cli::kUsage);
  EXPECT_EQ(run_cli({"family", "--kind", "nonsense", "--n", "3"}).exit_code, cli::kUsage);
  EXPECT_EQ(run_cli({"enumerate-cacti", "--n", "0"}).exit_code, cli::kUsage);
  const auto r = run_cli({"verify", "--suite", "nope"});
  EXPECT_EQ(r.exit_code, cli::kUsage);
  EXPECT_EQ(r.payload["code"], "usage_error");
}

TEST(Cli, MalformedJsonReportsLine) {
  const auto r = run_cli({"hstar", "-"}, "{\"dim\": 2,\n \"vertices\": [[0,0],\n [1,0] [0,1]]}");
  EXPECT_EQ(r.exit_code, cli::kDomainError);
  EXPECT_EQ(r.status, "error");
  EXPECT_EQ(r.payload["code"], "parse_error");
  EXPECT_NE(r.payload["message"].get<std::string>().find("-:3:"), std::string::npos) << r.payload.dump();
}

TEST(Cli, MissingFieldNamesTheField) {
  const auto r = run_cli({"hstar", "-"}, R"({"dim": 2})");
  EXPECT_EQ(r.exit_code, cli::kDomainError);
  EXPECT_NE(r.payload["message"].get<std::string>().find("vertices"), std::string::npos) << r.payload.dump();
}

TEST(Cli, DomainErrorsMapToExitThree) {
  const auto r = run_cli({"family", "--kind", "Dk", "--n", "3", "--k", "0"});
  EXPECT_EQ(r.exit_code, cli::kDomainError);
  EXPECT_EQ(r.payload["code"], "precondition_failed");
  const auto g = run_cli({"preq", "-"}, R"({"dim":2,"vertices":[[0,0],[2,0],[0,1],[2,1]]})");
  EXPECT_EQ(g.payload["code"], "not_gorenstein");
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"enumerate-cacti", "--n", "5", "--realize"};
  auto a = run_cli(args), b = run_cli(args);
  EXPECT_EQ(a.payload, b.payload);
  const std::string pk = cli::render(run_cli({"family", "--kind", "Pk", "--n", "3", "--k", "1"}));
  auto p1 = run_cli({"preq", "-"}, pk), p2 = run_cli({"preq", "-"}, pk);
  EXPECT_EQ(p1.payload, p2.payload);
  EXPECT_EQ(p1.payload["gorenstein_index"], 1);
}

TEST(Cli, IdentifyAndEquiv) {
  const std::string dk = cli::render(run_cli({"family", "--kind", "Dk", "--n", "4", "--k", "2"}));
  const auto id = run_cli({"identify", "-"}, dk);
  EXPECT_EQ(id.payload["family"], "D_k");
  EXPECT_EQ(id.payload["k"], 2);
  const auto sc = run_cli({"identify", "-"}, cli::render(run_cli({"family", "--kind", "smallcross", "--n", "3"})));
  EXPECT_EQ(sc.payload["family"], "small_cross");
  const auto none = run_cli({"identify", "-"}, cli::render(run_cli({"family", "--kind", "cross", "--n", "3"})));
  EXPECT_EQ(none.payload["family"], "none");
  EXPECT_TRUE(none.payload["reasons"].contains("small_cross"));

  const std::string a = write_temp("t0.json", cli::render(run_cli({"family", "--kind", "Tk", "--n", "3", "--k", "0"})));
  const std::string b = write_temp("t1.json", cli::render(run_cli({"family", "--kind", "Tk", "--n", "3", "--k", "1"})));
  EXPECT_EQ(run_cli({"equiv", a, a}).payload["verdict"], "equivalent");
  const auto ne = run_cli({"equiv", a, b});
  EXPECT_EQ(ne.payload["verdict"], "inequivalent");
  EXPECT_FALSE(ne.payload.contains("map"));
}

TEST(Cli, CactusRoundTrip) {
  const auto en = run_cli({"enumerate-cacti", "--n", "3"});
  for (const auto& e : en.payload["cacti"]) {
    const auto real = run_cli({"realize", "-"}, e["cactus"].dump());
    ASSERT_EQ(real.exit_code, cli::kOk) << real.payload.dump();
    const auto ex = run_cli({"extract", "-"}, cli::render(real));
    EXPECT_EQ(ex.payload["code"], e["code"]);
    EXPECT_EQ(ex.payload["triangles"], 3);
  }
}

TEST(Cli, RootsAndVerify) {
  const std::string cross = cli::render(run_cli({"family", "--kind", "cross", "--n", "4"}));
  const auto ok = run_cli({"roots", "-", "--target", "-0.5"}, cross);
  EXPECT_EQ(ok.exit_code, cli::kOk);
  EXPECT_EQ(ok.payload["verdict"], true);
  const std::string simplex = cli::render(run_cli({"family", "--kind", "simplex", "--n", "3"}));
  const auto bad = run_cli({"roots", "-", "--target", "-0.5"}, simplex);
  EXPECT_EQ(bad.exit_code, cli::kVerificationFailed);
  EXPECT_EQ(bad.status, "failed");
  const auto v = run_cli({"verify", "--suite", "hstar"});
  EXPECT_EQ(v.exit_code, cli::kOk);
  EXPECT_EQ(v.payload["passed"], true);
}

TEST(JsonIo, RoundTrips) {
  const LatticePolytope p = family_Tk(3, 2);
  EXPECT_EQ(polytope_from_json(polytope_to_json(p)), p);
  const AffineUnimodularMap m(IntegerMatrix{{1, 1}, {0, 1}}, LatticeVector{3, -4});
  EXPECT_EQ(map_from_json(map_to_json(m)), m);
  const HalfspaceSystem h = cube(2, 0, 1).facets();
  const HalfspaceSystem back = halfspaces_from_json(halfspaces_to_json(h));
  EXPECT_EQ(back.dim, h.dim);
  EXPECT_EQ(back.halfspaces, h.halfspaces);
  const CactusNode c = enumerate_cacti(4).back();
  EXPECT_EQ(canonical_code(cactus_from_json(cactus_to_json(c))), canonical_code(c));
  EXPECT_EQ(integer_from_json(Json("123456789012345678901234567890"), "x"), Integer("123456789012345678901234567890"));
  EXPECT_EQ(integer_from_json(Json(-5), "x"), -5);
  const BottMatrix b = bott_from_json(Json::parse(R"({"lower":[1,0,1]})"));
  EXPECT_EQ(b.full(), BottMatrix(3, {1, 0, 1}).full());
}

TEST(JsonIo, BigCoordinatesBecomeStrings) {
  const LatticePolytope p = LatticePolytope::hull(
      {LatticeVector(std::vector<Integer>{Integer(0)}), LatticeVector(std::vector<Integer>{Integer("100000000000000000000")})});
  const Json j = polytope_to_json(p);
  EXPECT_TRUE(j["vertices"][1][0].is_string());
  EXPECT_EQ(polytope_from_json(j), p);
}

}  // namespace
}  // namespace toric
