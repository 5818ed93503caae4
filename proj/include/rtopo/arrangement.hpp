/* Apache License, Version 2.0 */
#ifndef RTOPO_ARRANGEMENT_HPP
#define RTOPO_ARRANGEMENT_HPP

#include <cstdint>
#include <vector>

#include "rtopo/geometry.hpp"

namespace rtopo {

struct Feature {
  enum class Kind { Vertex, Edge, Face };
  Kind kind;
  int index;
  friend bool operator==(const Feature&, const Feature&) = default;
};

// Exact planar arrangement of segments as a half-edge structure. Input
// segments are split at every pairwise intersection; collinear overlaps are
// merged into single edges (tags are OR-combined). Face 0 is the unbounded
// face. Immutable once built.
class Arrangement {
 public:
  struct HalfEdge {
    int origin = -1;  // vertex id; twin is index ^ 1, edge is index / 2
    int next = -1;    // walk successor keeping the face on the left
    int orbit = -1;
  };
  struct EdgeRec {
    int v0 = -1, v1 = -1;  // half-edges 2k (v0->v1), 2k+1 (v1->v0)
    std::uint32_t tags = 0;
  };
  struct Orbit {
    std::vector<int> halfedges;  // in walk order
    Rational area2;              // twice the signed walk area
    int face = -1;
  };
  struct Face {
    int outer = -1;              // orbit id; -1 for the unbounded face
    std::vector<int> inner;      // hole/antenna walks inside this face
    Rational area;               // 0 for the unbounded face
  };

  static Arrangement build(const std::vector<Segment>& segments,
                           const std::vector<std::uint32_t>& tags = {});

  const std::vector<Point>& vertices() const { return verts_; }
  const std::vector<EdgeRec>& edges() const { return edges_; }
  const std::vector<HalfEdge>& halfedges() const { return hes_; }
  const std::vector<Orbit>& orbits() const { return orbits_; }
  const std::vector<Face>& faces() const { return faces_; }

  std::size_t vertex_count() const { return verts_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return faces_.size(); }
  int input_component_count() const { return components_; }

  Segment edge_segment(int e) const {
    return Segment(verts_[edges_[e].v0], verts_[edges_[e].v1]);
  }
  int he_target(int h) const { return hes_[h ^ 1].origin; }
  // Face to the left of half-edge h.
  int face_left(int h) const { return orbits_[hes_[h].orbit].face; }
  // Faces left of half-edges 2e and 2e+1.
  std::pair<int, int> edge_faces(int e) const {
    return {face_left(2 * e), face_left(2 * e + 1)};
  }
  const std::vector<int>& vertex_out(int v) const { return vertex_out_[v]; }

  // Exact point location.
  Feature locate(const Point& p) const;

  // A strictly interior rational point of a bounded face.
  Point face_sample(int face) const;

  // True Euler check V - E + F = 1 + C; build() already enforces it.
  bool euler_ok() const;

 private:
  std::vector<Point> verts_;
  std::vector<EdgeRec> edges_;
  std::vector<HalfEdge> hes_;
  std::vector<std::vector<int>> vertex_out_;  // outgoing half-edges, CCW order
  std::vector<Orbit> orbits_;
  std::vector<Face> faces_;
  int components_ = 0;

  bool orbit_contains(int orbit, const Point& p) const;  // strict
};

}  // namespace rtopo

#endif
