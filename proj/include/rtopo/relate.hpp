/* Apache License, Version 2.0 */
#ifndef RTOPO_RELATE_HPP
#define RTOPO_RELATE_HPP

#include <array>
#include <optional>
#include <string>

#include "rtopo/region.hpp"

namespace rtopo {

// 3x3 emptiness matrix: rows are interior/boundary/exterior of the first
// region, columns likewise for the second; true = intersection nonempty.
struct NineIntersection {
  std::array<std::array<bool, 3>, 3> m{};

  std::string str() const;  // 9 chars, row-major, 'T'/'F'
  NineIntersection transposed() const;
  friend bool operator==(const NineIntersection&, const NineIntersection&) = default;
};

enum class Rcc8 { DC, EC, PO, TPP, NTPP, TPPi, NTPPi, EQ };
const char* rcc8_str(Rcc8 r);

// The eight canonical matrices between simple regions; any other pattern is
// "not simple" and maps to nullopt.
std::optional<Rcc8> rcc8_name(const NineIntersection& m);
NineIntersection rcc8_matrix(Rcc8 r);

// Exact 9-intersection between two simple polygons, computed directly from
// edge intersections and point-in-ring tests (no arrangement).
NineIntersection ring_pair_nine_intersection(const Ring& p, const Ring& q);

// Joint arrangement of two region boundaries with every feature classified
// against both regions (0 interior, 1 boundary, 2 exterior).
struct Overlay {
  Arrangement arr;
  std::vector<std::array<int, 2>> face_cls;
  std::vector<std::array<int, 2>> edge_cls;
  std::vector<std::array<int, 2>> vertex_cls;

  bool pair_present(int i, int j) const;
};

Overlay make_overlay(const Region& a, const Region& b);

NineIntersection nine_intersection_global(const Region& a, const Region& b);

// Full matrix for every atom pair of two regions; rows index atoms of the
// first region.
struct AtomRelationTable {
  std::size_t rows = 0, cols = 0;
  std::vector<NineIntersection> cells;

  const NineIntersection& at(std::size_t i, std::size_t j) const;
  // X subset of Y: nothing of X's interior or boundary meets Y's exterior.
  bool subset(std::size_t i, std::size_t j) const;
};

AtomRelationTable build_atom_relation_table(const AtomsSummary& a,
                                            const AtomsSummary& b);

// Intersection degrees of every component (including both unbounded
// components), computed from atom-level data only.
struct DegreeReport {
  // indexed by component id of the respective region
  std::vector<int> deg_plus_a, deg_a;  // components of A w.r.t. B
  std::vector<int> deg_plus_b, deg_b;  // components of B w.r.t. A
};

DegreeReport degrees_from_table(const AtomsSummary& a, const AtomsSummary& b,
                                const AtomRelationTable& t);
DegreeReport degrees(const Region& a, const Region& b);

NineIntersection nine_intersection_local(const AtomsSummary& a,
                                         const AtomsSummary& b,
                                         const AtomRelationTable& t);
NineIntersection nine_intersection_local(const Region& a, const Region& b);

struct LocalGlobalCheck {
  NineIntersection local;
  NineIntersection global;
  bool agree = false;
};

LocalGlobalCheck verify_local_equals_global(const Region& a, const Region& b);

}  // namespace rtopo

#endif
