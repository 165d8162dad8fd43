#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "toric/cactus.hpp"
#include "toric/constructions.hpp"
#include "toric/ehrhart.hpp"
#include "toric/polytope.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

/// Parses text, reporting syntax errors as kParse with line and column.
Json parse_json(const std::string& text, const std::string& source);
/// Reads a file, or the stream when path is "-".
std::string read_input(const std::string& path, std::istream& stdin_stream);
/// A CLI envelope {"status", "payload", ...} yields its payload; other documents pass through.
const Json& unwrap_payload(const Json& doc);

/// Decimal string, so consumers never truncate to 64 bits.
Json integer_json(const Integer& x);
/// Accepts JSON integers or decimal strings; `field` names the location in errors.
Integer integer_from_json(const Json& j, const std::string& field);

/// {"dim": n, "vertices": [[...], ...]}; coordinates are numbers when they fit 64 bits.
Json polytope_to_json(const LatticePolytope& p);
/// Accepts the polytope object or an envelope around it. The result is the hull of the listed points.
LatticePolytope polytope_from_json(const Json& doc);

/// Vertices as "p/q" strings.
Json rational_polytope_to_json(const RationalPolytope& p);

Json map_to_json(const AffineUnimodularMap& m);
AffineUnimodularMap map_from_json(const Json& doc);

/// {"dim": n, "halfspaces": [{"normal": [...], "offset": b}, ...]}
Json halfspaces_to_json(const HalfspaceSystem& h);
HalfspaceSystem halfspaces_from_json(const Json& doc);

/// Node = list of triangles, triangle = [node, node]; a leaf is [].
Json cactus_to_json(const CactusNode& c);
CactusNode cactus_from_json(const Json& doc);

/// {"lower": [...]} with n(n-1)/2 entries row by row, or {"matrix": [[...], ...]}.
BottMatrix bott_from_json(const Json& doc);

Json hstar_to_json(const HStarVector& h);

}  // namespace toric
