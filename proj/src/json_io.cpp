#include "toric/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  fail(ErrorCode::kParse, "field " + field + ": " + what);
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) field_error(where.empty() ? "<root>" : where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) field_error(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

const Json& require_array(const Json& j, const std::string& field) {
  if (!j.is_array()) field_error(field, "expected an array");
  return j;
}

std::size_t size_from_json(const Json& j, const std::string& field) {
  const Integer v = integer_from_json(j, field);
  if (v < 0 || !fits_int64(v)) field_error(field, "expected a nonnegative size");
  return static_cast<std::size_t>(v.get_si());
}

LatticeVector vector_from_json(const Json& j, const std::string& field) {
  require_array(j, field);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return LatticeVector(std::move(out));
}

Json coordinate_json(const Integer& x) {
  if (fits_int64(x)) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(to_string(x));
}

Json vector_json(const LatticeVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(coordinate_json(x));
  return out;
}

IntegerMatrix matrix_from_json(const Json& j, const std::string& field) {
  require_array(j, field);
  std::vector<LatticeVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(vector_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  for (const auto& r : rows)
    if (r.dim() != rows.size()) field_error(field, "expected a square matrix");
  if (rows.empty()) field_error(field, "empty matrix");
  return IntegerMatrix::from_rows(rows);
}

Json matrix_json(const IntegerMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

CactusNode node_from_json(const Json& j, const std::string& field) {
  require_array(j, field);
  CactusNode node;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string tf = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) field_error(tf, "a triangle is a pair of nodes");
    node.triangles.push_back({node_from_json(j[i][0], tf + "[0]"), node_from_json(j[i][1], tf + "[1]")});
  }
  return node;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    fail(ErrorCode::kParse, source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": malformed JSON");
  }
}

std::string read_input(const std::string& path, std::istream& stdin_stream) {
  std::ostringstream buf;
  if (path == "-") {
    buf << stdin_stream.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::kParse, "cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

const Json& unwrap_payload(const Json& doc) {
  if (doc.is_object() && doc.contains("status") && doc.contains("payload")) return doc["payload"];
  return doc;
}

Json integer_json(const Integer& x) { return Json(to_string(x)); }

Integer integer_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                                           : from_int64(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const ToricError&) {
      field_error(field, "expected a decimal integer");
    }
  }
  field_error(field, "expected an integer");
}

Json polytope_to_json(const LatticePolytope& p) {
  Json out;
  out["dim"] = p.dim();
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(vector_json(v));
  out["vertices"] = std::move(vs);
  return out;
}

LatticePolytope polytope_from_json(const Json& doc) {
  const Json& j = unwrap_payload(doc);
  const std::size_t dim = size_from_json(require(j, "dim", ""), "dim");
  const Json& vs = require_array(require(j, "vertices", ""), "vertices");
  std::vector<LatticeVector> points;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string field = "vertices[" + std::to_string(i) + "]";
    points.push_back(vector_from_json(vs[i], field));
    if (points.back().dim() != dim) field_error(field, "expected " + std::to_string(dim) + " coordinates");
  }
  if (points.empty()) field_error("vertices", "empty vertex list");
  return LatticePolytope::hull(std::move(points));
}

Json rational_polytope_to_json(const RationalPolytope& p) {
  Json out;
  out["dim"] = p.dim();
  out["integral"] = p.is_integral();
  Json vs = Json::array();
  for (const auto& v : p.vertices()) {
    Json row = Json::array();
    for (const auto& x : v.coords()) row.push_back(to_string(x));
    vs.push_back(std::move(row));
  }
  out["vertices"] = std::move(vs);
  return out;
}

Json map_to_json(const AffineUnimodularMap& m) {
  Json out;
  out["linear"] = matrix_json(m.linear());
  out["translation"] = vector_json(m.translation());
  return out;
}

AffineUnimodularMap map_from_json(const Json& doc) {
  const Json& j = unwrap_payload(doc);
  IntegerMatrix linear = matrix_from_json(require(j, "linear", ""), "linear");
  LatticeVector translation = vector_from_json(require(j, "translation", ""), "translation");
  if (translation.dim() != linear.rows()) field_error("translation", "length differs from the matrix size");
  return AffineUnimodularMap(std::move(linear), std::move(translation));
}

Json halfspaces_to_json(const HalfspaceSystem& h) {
  Json out;
  out["dim"] = h.dim;
  Json hs = Json::array();
  for (const auto& f : h) {
    Json e;
    e["normal"] = vector_json(f.normal);
    e["offset"] = coordinate_json(f.offset);
    hs.push_back(std::move(e));
  }
  out["halfspaces"] = std::move(hs);
  return out;
}

HalfspaceSystem halfspaces_from_json(const Json& doc) {
  const Json& j = unwrap_payload(doc);
  HalfspaceSystem out;
  out.dim = size_from_json(require(j, "dim", ""), "dim");
  const Json& hs = require_array(require(j, "halfspaces", ""), "halfspaces");
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::string field = "halfspaces[" + std::to_string(i) + "]";
    Halfspace h{vector_from_json(require(hs[i], "normal", field), field + ".normal"),
                integer_from_json(require(hs[i], "offset", field), field + ".offset")};
    if (h.normal.dim() != out.dim) field_error(field + ".normal", "expected " + std::to_string(out.dim) + " entries");
    out.halfspaces.push_back(std::move(h));
  }
  return out;
}

Json cactus_to_json(const CactusNode& c) {
  Json out = Json::array();
  for (const auto& t : c.triangles) out.push_back(Json::array({cactus_to_json(t.first), cactus_to_json(t.second)}));
  return out;
}

CactusNode cactus_from_json(const Json& doc) {
  const Json& j = unwrap_payload(doc);
  if (j.is_object()) return node_from_json(require(j, "cactus", ""), "cactus");
  return node_from_json(j, "<root>");
}

BottMatrix bott_from_json(const Json& doc) {
  const Json& j = unwrap_payload(doc);
  if (j.is_object() && j.contains("matrix")) return BottMatrix::from_full(matrix_from_json(j["matrix"], "matrix"));
  const Json& lower = require_array(require(j, "lower", ""), "lower");
  std::vector<long> entries;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    const std::string field = "lower[" + std::to_string(i) + "]";
    const Integer v = integer_from_json(lower[i], field);
    if (!v.fits_slong_p()) field_error(field, "entry too large");
    entries.push_back(v.get_si());
  }
  std::size_t n = 1;
  while (n * (n - 1) / 2 < entries.size()) ++n;
  if (n * (n - 1) / 2 != entries.size()) field_error("lower", "length is not n(n-1)/2");
  return BottMatrix(n, entries);
}

Json hstar_to_json(const HStarVector& h) {
  Json out = Json::array();
  for (const auto& c : h.coeffs()) out.push_back(integer_json(c));
  return out;
}

}  // namespace toric
