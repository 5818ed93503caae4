/* Apache License, Version 2.0 */
#ifndef RTOPO_TESTS_FIXTURES_HPP
#define RTOPO_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "rtopo/document.hpp"

namespace rtopo::testing {

std::string fixture_path(const std::string& name);
std::string read_fixture_text(const std::string& name);
RegionDocument load_document(const std::string& name);
Region load_region(const std::string& name);

// Component id whose face contains p; fails the test if p is not strictly
// inside a face.
int component_at(const Region& r, const Point& p);

// Canonical sorted ring keys; equal sets mean geometrically equal ring
// collections.
std::vector<std::string> ring_keys(const std::vector<Ring>& rings);

// The positive components' generalized rings of a hole-free region; used
// to compare regions that live on different arrangements.
std::vector<std::string> composite_keys(const Region& r);

}  // namespace rtopo::testing

#endif
