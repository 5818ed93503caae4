/* Apache License, Version 2.0 */
#ifndef RTOPO_GEOMETRY_HPP
#define RTOPO_GEOMETRY_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rtopo/errors.hpp"
#include "rtopo/rational.hpp"

namespace rtopo {

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  Point(long px, long py) : x(px), y(py) {}

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const Point& a, const Point& b) {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return cmp(a.y, b.y) < 0;
  }
};

std::string point_str(const Point& p);

struct Segment {
  Point a;
  Point b;

  Segment() = default;
  Segment(Point pa, Point pb) : a(std::move(pa)), b(std::move(pb)) {}

  friend bool operator==(const Segment& s, const Segment& t) {
    return s.a == t.a && s.b == t.b;
  }
};

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

// Sign of the cross product (q - p) x (r - p), computed exactly.
Orientation orientation(const Point& p, const Point& q, const Point& r);

Rational cross(const Point& o, const Point& a, const Point& b);

// Closed-segment membership.
bool on_segment(const Point& p, const Segment& s);

struct SegIntersection {
  enum class Kind { Empty, SinglePoint, Subsegment };
  Kind kind = Kind::Empty;
  Point point;    // valid when kind == SinglePoint
  Segment sub;    // valid when kind == Subsegment; endpoints ordered
};

// Exact intersection of two nondegenerate closed segments. Collinear
// 1-dimensional overlap is reported as a Subsegment.
SegIntersection segment_intersection(const Segment& s1, const Segment& s2);

enum class PointLocation { Inside, Boundary, Outside };

// A simple closed polygon, stored counterclockwise with collinear chain
// vertices removed and rotated so the lexicographically smallest vertex
// comes first. Construct through validate().
class Ring {
 public:
  // Throws Err::SelfIntersection / Err::DegenerateRing. Clockwise input is
  // reversed; collinear chain vertices are dropped.
  static Ring validate(std::vector<Point> candidate);

  const std::vector<Point>& vertices() const { return verts_; }
  std::size_t size() const { return verts_.size(); }
  Segment edge(std::size_t i) const {
    return Segment(verts_[i], verts_[(i + 1) % verts_.size()]);
  }

  Rational area() const;  // positive, exact shoelace
  PointLocation contains(const Point& p) const;

  // Canonical text form; equal rings produce equal keys.
  std::string canonical_key() const;
  friend bool operator==(const Ring& a, const Ring& b) {
    return a.verts_ == b.verts_;
  }

  // Applies x' = m00 x + m01 y + tx, y' = m10 x + m11 y + ty and revalidates.
  Ring transformed(const Rational& m00, const Rational& m01,
                   const Rational& m10, const Rational& m11,
                   const Rational& tx, const Rational& ty) const;

 private:
  explicit Ring(std::vector<Point> v) : verts_(std::move(v)) {}
  std::vector<Point> verts_;
};

// Exact crossing-parity test of p against an arbitrary set of boundary
// edges (each separating inside from outside exactly once). Returns
// Boundary if p lies on any edge.
PointLocation point_in_edge_set(const Point& p, std::span<const Segment> edges);

PointLocation point_in_ring(const Point& p, const Ring& r);

Rational signed_area2(std::span<const Point> polygon);

}  // namespace rtopo

#endif
