#pragma once

// JSON input and output. Polytope files are {"dim": d, "vertices": [[...]]},
// triangulations {"cells": [[...]], "points": [[...]]}. Reports carry
// "schema_version"; docs/json-schemas.md describes every shape.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "latpoly/picktype.hpp"
#include "latpoly/radon.hpp"
#include "latpoly/search.hpp"
#include "latpoly/triangulation.hpp"
#include "latpoly/unimodular.hpp"

namespace latpoly {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
inline Json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

/// Rationals are strings, "7/6" or "3".
inline Json to_json(const Rational& v) {
  std::ostringstream os;
  os << v;
  return Json(os.str());
}

inline Json to_json(const LatticePoint& p) { return Json(p.coords()); }

inline Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Json to_json(const std::vector<LatticePoint>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(to_json(p));
  return a;
}

inline Json to_json(const BigMatrix& m) {
  Json a = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    a.push_back(std::move(r));
  }
  return a;
}

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

inline Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // byte is one past the offending character
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    fail(ErrorCode::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                                    ": malformed JSON (offset " + std::to_string(e.byte) + ")");
  }
}

[[noreturn]] inline void schema_error(const std::string& source, const std::string& what) {
  fail(ErrorCode::ParseError, source + ": " + what);
}

inline std::vector<LatticePoint> parse_points(const Json& arr, std::optional<std::size_t> dim, const std::string& source,
                                              const std::string& field) {
  if (!arr.is_array()) schema_error(source, "\"" + field + "\" must be an array");
  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const Json& row = arr[i];
    const std::string where = field + "[" + std::to_string(i) + "]";
    if (!row.is_array()) schema_error(source, where + " must be an array of integers");
    std::vector<std::int64_t> c;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_number_integer())
        schema_error(source, where + "[" + std::to_string(j) + "] is not an integer");
      if (row[j].is_number_unsigned() && row[j].get<std::uint64_t>() > std::uint64_t(INT64_MAX))
        schema_error(source, where + "[" + std::to_string(j) + "] is out of range");
      c.push_back(row[j].get<std::int64_t>());
    }
    if (dim && c.size() != *dim)
      schema_error(source, where + " has " + std::to_string(c.size()) + " coordinates, expected " +
                               std::to_string(*dim));
    if (!dim && !out.empty() && c.size() != out.front().dim()) schema_error(source, where + " dimension differs");
    out.emplace_back(std::move(c));
  }
  return out;
}

}  // namespace detail

inline Json polytope_json(const std::vector<LatticePoint>& vertices) {
  Json j;
  j["dim"] = vertices.empty() ? 0 : vertices.front().dim();
  j["vertices"] = to_json(vertices);
  return j;
}

inline Json polytope_json(const Polytope& p) { return polytope_json(p.vertices()); }
inline Json polytope_json(const Simplex& s) { return polytope_json(s.vertices()); }

/// The vertex list as written; the file may list points that are not
/// vertices, in which case the Polytope constructor rejects it.
inline std::vector<LatticePoint> parse_vertex_list(std::string_view text, const std::string& source = "<input>") {
  const Json j = detail::parse_json(text, source);
  if (!j.is_object()) detail::schema_error(source, "top level must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<std::int64_t>() < 1)
    detail::schema_error(source, "\"dim\" must be a positive integer");
  if (!j.contains("vertices")) detail::schema_error(source, "missing \"vertices\"");
  const auto d = static_cast<std::size_t>(j["dim"].get<std::int64_t>());
  auto vs = detail::parse_points(j["vertices"], d, source, "vertices");
  if (vs.empty()) detail::schema_error(source, "\"vertices\" is empty");
  return vs;
}

inline Polytope parse_polytope(std::string_view text, const std::string& source = "<input>") {
  return Polytope(parse_vertex_list(text, source));
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Polytope read_polytope(const std::string& path) { return parse_polytope(read_text_file(path), path); }

inline std::vector<LatticePoint> read_vertex_list(const std::string& path) {
  return parse_vertex_list(read_text_file(path), path);
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, path + ": cannot write file");
  out << j.dump(2) << '\n';
}

/// One line per vertex, parseable by parse_polytope.
inline std::string polytope_text(const std::vector<LatticePoint>& vertices) {
  std::string out = "{\n  \"dim\": " + std::to_string(vertices.front().dim()) + ",\n  \"vertices\": [\n";
  for (std::size_t i = 0; i < vertices.size(); ++i)
    out += "    " + to_json(vertices[i]).dump() + (i + 1 < vertices.size() ? ",\n" : "\n");
  return out + "  ]\n}\n";
}

inline void write_polytope_file(const std::string& path, const std::vector<LatticePoint>& vertices) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, path + ": cannot write file");
  out << polytope_text(vertices);
}

inline Json triangulation_json(const Triangulation& t) {
  Json j;
  Json cells = Json::array();
  for (const auto& c : t.cells()) cells.push_back(c);
  j["cells"] = std::move(cells);
  j["points"] = to_json(t.points());
  return j;
}

/// The carrier is the convex hull of the points.
inline Triangulation parse_triangulation(std::string_view text, const std::string& source = "<input>") {
  const Json j = detail::parse_json(text, source);
  if (!j.is_object() || !j.contains("cells") || !j.contains("points"))
    detail::schema_error(source, "expected an object with \"cells\" and \"points\"");
  auto pts = detail::parse_points(j["points"], std::nullopt, source, "points");
  if (pts.empty()) detail::schema_error(source, "\"points\" is empty");
  if (!j["cells"].is_array()) detail::schema_error(source, "\"cells\" must be an array");
  std::vector<Cell> cells;
  for (const auto& c : j["cells"]) {
    if (!c.is_array()) detail::schema_error(source, "every cell must be an array of indices");
    Cell cell;
    for (const auto& i : c) {
      if (!i.is_number_unsigned()) detail::schema_error(source, "cell indices must be non-negative integers");
      cell.push_back(i.get<std::size_t>());
    }
    cells.push_back(std::move(cell));
  }
  Polytope carrier = Polytope::hull(pts);
  return Triangulation(std::move(carrier), std::move(pts), std::move(cells));
}

inline Json census_json(const LatticePointCensus& c) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["interior"] = c.interior.size();
  j["boundary_nonvertex"] = c.boundary_nonvertex.size();
  j["vertices"] = c.vertex_count;
  j["clean"] = c.boundary_nonvertex.empty();
  j["interior_points"] = to_json(c.interior);
  j["boundary_points"] = to_json(c.boundary_nonvertex);
  return j;
}

inline Json lawson_json(const LawsonPartition& lp, const std::vector<Triangulation>& ts) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["a0"] = lp.a0;
  j["a1"] = lp.a1;
  j["a2"] = lp.a2;
  j["alphas"] = to_json(lp.alphas);
  Json sizes = Json::array();
  Json tris = Json::array();
  for (const auto& t : ts) {
    sizes.push_back(t.size());
    tris.push_back(triangulation_json(t));
  }
  j["triangulation_sizes"] = std::move(sizes);
  j["triangulations"] = std::move(tris);
  return j;
}

inline std::string tag_string(const CanonicalForm& f) {
  std::string s;
  for (std::size_t i = 0; i < f.tag.size(); ++i) s += (i ? "," : "") + f.tag[i].str();
  return s;
}

inline Json canonical_json(const CanonicalForm& f) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  Json tag = Json::array();
  for (const auto& x : f.tag) tag.push_back(to_json(x));
  j["tag"] = std::move(tag);
  j["perm"] = f.perm;
  j["transform"] = to_json(f.transform);
  return j;
}

inline Json map_json(const UnimodularMap& m) {
  Json j;
  j["matrix"] = m.matrix();
  j["translation"] = to_json(m.translation());
  return j;
}

inline Json classification_json(const ClassificationReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["candidates"] = r.candidates;
  j["survivors"] = r.survivors;
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json e;
    e["params"] = c.params;
    e["vertices"] = to_json(c.representative.vertices());
    e["normalized_volume"] = to_json(c.normalized_volume);
    e["interior"] = c.interior_count;
    e["members"] = c.members;
    e["tag"] = tag_string(c.form);
    classes.push_back(std::move(e));
  }
  j["classes"] = std::move(classes);
  return j;
}

inline Json minimal_classification_json(const MinimalClassificationReport& r) {
  Json j = classification_json(r.sweep);
  j["d"] = r.d;
  j["k"] = r.k;
  j["unique_class"] = r.unique_class;
  j["all_equivalent"] = r.all_equivalent;
  j["reference_clean"] = r.reference_clean;
  j["reference_count"] = r.reference_count;
  j["reference_collinear"] = r.reference_collinear;
  j["reference_through_vertex"] = r.reference_through_vertex;
  j["reference_evenly_spaced"] = r.reference_evenly_spaced;
  j["verified"] = r.verified();
  return j;
}

inline Json max_volume_json(const MaxVolumeReport& r) {
  Json j = classification_json(r.sweep);
  j["k"] = r.k;
  j["n_max"] = r.n_max;
  j["conjectured_volume"] = to_json(r.conjectured_volume);
  j["max_volume"] = r.max_volume ? to_json(*r.max_volume) : Json(nullptr);
  j["maximizers"] = r.maximizers;
  j["bound_holds"] = r.bound_holds;
  j["maximizer_matches"] = r.maximizer_matches;
  j["interior_collinear"] = r.interior_collinear ? Json(*r.interior_collinear) : Json(nullptr);
  j["line_misses_vertices"] = r.line_misses_vertices ? Json(*r.line_misses_vertices) : Json(nullptr);
  j["ziegler_holds"] = r.ziegler_holds;
  return j;
}

inline Json delta_json(const DeltaIdentityReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["p"] = r.p;
  j["q"] = r.q;
  j["r"] = r.r;
  j["first_sum"] = to_json(r.first_sum);
  j["second_sum"] = to_json(r.second_sum);
  j["closed_form"] = to_json(r.closed_form);
  j["census_interior"] = r.census_interior;
  j["identity_holds"] = r.identity_holds;
  j["columns_match"] = r.columns_match;
  j["clean"] = r.clean;
  j["ok"] = r.ok();
  return j;
}

}  // namespace latpoly
