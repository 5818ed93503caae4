/* Apache License, Version 2.0 */
#include "rtopo/document.hpp"

#include <json.hpp>

#include <limits>

namespace rtopo {

using nlohmann::ordered_json;

bool operator==(const RegionDocument& a, const RegionDocument& b) {
  if (a.rings != b.rings) return false;
  // expressions compare via their serialized form
  return serialize_region_document(a) == serialize_region_document(b);
}

namespace {

Rational coord_from_json(const ordered_json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() &&
        j.get<std::uint64_t>() >
            static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      fail(Err::BadRational, "integer coordinate out of range; write it as a string");
    return Rational(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    auto q = parse_rational(j.get<std::string>());
    if (!q) fail(Err::BadRational, "bad coordinate '" + j.get<std::string>() + "'");
    return *q;
  }
  if (j.is_number())
    fail(Err::BadRational, "non-integer numeric coordinate (use \"p/q\")");
  fail(Err::SyntaxError, "coordinate must be an integer or a rational string");
}

RegionExpr expr_from_json(const ordered_json& j,
                          const std::map<std::string, std::vector<Point>>& rings) {
  if (!j.is_array() || j.empty() || !j[0].is_string())
    fail(Err::SyntaxError, "expression node must be [op, ...]");
  std::string op = j[0].get<std::string>();
  if (op == "ref") {
    if (j.size() != 2 || !j[1].is_string())
      fail(Err::SyntaxError, "ref takes one ring name");
    std::string name = j[1].get<std::string>();
    if (!rings.count(name)) fail(Err::UnknownRingRef, "ring '" + name + "'");
    return RegionExpr::make_ref(name);
  }
  std::vector<RegionExpr> args;
  for (std::size_t i = 1; i < j.size(); ++i)
    args.push_back(expr_from_json(j[i], rings));
  if (op == "union") {
    if (args.size() < 2) fail(Err::SyntaxError, "union takes at least 2 operands");
    return RegionExpr::make_union(std::move(args));
  }
  if (op == "intersection") {
    if (args.size() < 2)
      fail(Err::SyntaxError, "intersection takes at least 2 operands");
    return RegionExpr::make_intersection(std::move(args));
  }
  if (op == "difference") {
    if (args.size() != 2) fail(Err::SyntaxError, "difference takes 2 operands");
    return RegionExpr::make_difference(std::move(args[0]), std::move(args[1]));
  }
  if (op == "complement") {
    if (args.size() != 1) fail(Err::SyntaxError, "complement takes 1 operand");
    return RegionExpr::make_complement(std::move(args[0]));
  }
  fail(Err::SyntaxError, "unknown operator '" + op + "'");
}

ordered_json coord_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return ordered_json(q.get_num().get_si());
  return ordered_json(rational_str(q));
}

ordered_json expr_to_json(const RegionExpr& e) {
  ordered_json j = ordered_json::array();
  switch (e.op) {
    case RegionExpr::Op::Ref:
      j.push_back("ref");
      j.push_back(e.ref);
      return j;
    case RegionExpr::Op::Union: j.push_back("union"); break;
    case RegionExpr::Op::Intersection: j.push_back("intersection"); break;
    case RegionExpr::Op::Difference: j.push_back("difference"); break;
    case RegionExpr::Op::Complement: j.push_back("complement"); break;
  }
  for (const RegionExpr& a : e.args) j.push_back(expr_to_json(a));
  return j;
}

}  // namespace

RegionDocument parse_region_document(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(Err::SyntaxError, e.what());
  }
  if (!j.is_object()) fail(Err::SyntaxError, "document must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "rings" && it.key() != "region")
      fail(Err::SyntaxError, "unknown key '" + it.key() + "'");
  if (!j.contains("rings") || !j["rings"].is_object())
    fail(Err::SyntaxError, "missing 'rings' object");
  if (!j.contains("region"))
    fail(Err::SyntaxError, "missing 'region' expression");

  RegionDocument doc;
  for (auto it = j["rings"].begin(); it != j["rings"].end(); ++it) {
    if (!it.value().is_array())
      fail(Err::SyntaxError, "ring '" + it.key() + "' must be a vertex array");
    std::vector<Point> pts;
    for (const auto& v : it.value()) {
      if (!v.is_array() || v.size() != 2)
        fail(Err::SyntaxError, "vertex must be [x, y]");
      pts.emplace_back(coord_from_json(v[0]), coord_from_json(v[1]));
    }
    doc.rings.emplace(it.key(), std::move(pts));
  }
  doc.expr = expr_from_json(j["region"], doc.rings);
  return doc;
}

std::string serialize_region_document(const RegionDocument& doc) {
  ordered_json j;
  ordered_json rings = ordered_json::object();
  for (const auto& [name, pts] : doc.rings) {
    ordered_json arr = ordered_json::array();
    for (const Point& p : pts) {
      ordered_json v = ordered_json::array();
      v.push_back(coord_to_json(p.x));
      v.push_back(coord_to_json(p.y));
      arr.push_back(std::move(v));
    }
    rings[name] = std::move(arr);
  }
  j["rings"] = std::move(rings);
  j["region"] = expr_to_json(doc.expr);
  return j.dump();
}

Region region_from_document(const RegionDocument& doc) {
  RingTable table;
  for (const auto& [name, pts] : doc.rings) {
    try {
      table.emplace(name, Ring::validate(pts));
    } catch (const Error& e) {
      throw Error(e.code(), "ring '" + name + "': " + e.what());
    }
  }
  return Region::evaluate(table, doc.expr);
}

RegionDocument document_for_region(const Region& region) {
  RegionDocument doc;
  std::vector<RegionExpr> pieces;
  for (const Component& c : region.components()) {
    if (c.kind != ComponentKind::Positive) continue;
    std::string base = "c" + std::to_string(c.id);
    doc.rings.emplace(base, region.generalized_of_component(c.id).vertices());
    std::vector<RegionExpr> holes;
    auto hole_rings = region.holes_of(c.id);
    for (std::size_t k = 0; k < hole_rings.size(); ++k) {
      std::string hn = base + "h" + std::to_string(k);
      doc.rings.emplace(hn, hole_rings[k].vertices());
      holes.push_back(RegionExpr::make_ref(hn));
    }
    RegionExpr piece = RegionExpr::make_ref(base);
    if (!holes.empty()) {
      RegionExpr cut = holes.size() == 1 ? std::move(holes[0])
                                         : RegionExpr::make_union(std::move(holes));
      piece = RegionExpr::make_difference(std::move(piece), std::move(cut));
    }
    pieces.push_back(std::move(piece));
  }
  doc.expr = pieces.size() == 1 ? std::move(pieces[0])
                                : RegionExpr::make_union(std::move(pieces));
  return doc;
}

}  // namespace rtopo
