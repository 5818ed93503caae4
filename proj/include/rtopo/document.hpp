/* Apache License, Version 2.0 */
#ifndef RTOPO_DOCUMENT_HPP
#define RTOPO_DOCUMENT_HPP

#include <map>
#include <string>
#include <vector>

#include "rtopo/region.hpp"

namespace rtopo {

// On-disk region description: one JSON object with named rings (exact
// coordinates, integers or "p/q" strings) and a boolean expression tree
// over them as nested arrays.
struct RegionDocument {
  std::map<std::string, std::vector<Point>> rings;  // raw, as given
  RegionExpr expr;

  friend bool operator==(const RegionDocument& a, const RegionDocument& b);
};

// Strict parse: unknown keys, malformed coordinates, dangling refs and
// non-integer numbers are rejected. Throws Err::SyntaxError,
// Err::BadRational, Err::UnknownRingRef.
RegionDocument parse_region_document(const std::string& json_text);

std::string serialize_region_document(const RegionDocument& doc);

// Validates every ring and evaluates the expression.
Region region_from_document(const RegionDocument& doc);

// Reconstruction document for an analyzed region: each positive component
// as its generalized ring minus its hole rings; a flat union when the
// region is hole-free.
RegionDocument document_for_region(const Region& region);

}  // namespace rtopo

#endif
