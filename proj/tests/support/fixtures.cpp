/* Apache License, Version 2.0 */
#include "support/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rtopo::testing {

std::string fixture_path(const std::string& name) {
  return std::string(RTOPO_TEST_DATA_DIR) + "/" + name;
}

std::string read_fixture_text(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture: " + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RegionDocument load_document(const std::string& name) {
  return parse_region_document(read_fixture_text(name));
}

Region load_region(const std::string& name) {
  return region_from_document(load_document(name));
}

int component_at(const Region& r, const Point& p) {
  auto c = r.component_at(p);
  if (!c) throw std::runtime_error("witness point not strictly inside a face");
  return *c;
}

std::vector<std::string> ring_keys(const std::vector<Ring>& rings) {
  std::vector<std::string> keys;
  keys.reserve(rings.size());
  for (const Ring& r : rings) keys.push_back(r.canonical_key());
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<std::string> composite_keys(const Region& r) {
  std::vector<std::string> keys;
  for (int c : r.positive_components())
    keys.push_back(r.generalized_of_component(c).canonical_key());
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace rtopo::testing
