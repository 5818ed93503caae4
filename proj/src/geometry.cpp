/* Apache License, Version 2.0 */
#include "rtopo/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rtopo {

std::optional<Rational> parse_rational(const std::string& text) {
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_int(num) || !is_int(den)) return std::nullopt;
  mpz_class n(num), d(den);
  if (d == 0) return std::nullopt;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string point_str(const Point& p) {
  return "(" + rational_str(p.x) + "," + rational_str(p.y) + ")";
}

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  int s = sgn(cross(p, q, r));
  if (s > 0) return Orientation::CCW;
  if (s < 0) return Orientation::CW;
  return Orientation::Collinear;
}

bool on_segment(const Point& p, const Segment& s) {
  if (orientation(s.a, s.b, p) != Orientation::Collinear) return false;
  Rational d = (p.x - s.a.x) * (s.b.x - s.a.x) + (p.y - s.a.y) * (s.b.y - s.a.y);
  if (sgn(d) < 0) return false;
  Rational len2 = (s.b.x - s.a.x) * (s.b.x - s.a.x) + (s.b.y - s.a.y) * (s.b.y - s.a.y);
  return cmp(d, len2) <= 0;
}

SegIntersection segment_intersection(const Segment& s1, const Segment& s2) {
  SegIntersection out;
  // bbox reject
  auto minmax = [](const Rational& a, const Rational& b) {
    return cmp(a, b) <= 0 ? std::pair<const Rational&, const Rational&>(a, b)
                          : std::pair<const Rational&, const Rational&>(b, a);
  };
  {
    auto [x1lo, x1hi] = minmax(s1.a.x, s1.b.x);
    auto [x2lo, x2hi] = minmax(s2.a.x, s2.b.x);
    if (cmp(x1hi, x2lo) < 0 || cmp(x2hi, x1lo) < 0) return out;
    auto [y1lo, y1hi] = minmax(s1.a.y, s1.b.y);
    auto [y2lo, y2hi] = minmax(s2.a.y, s2.b.y);
    if (cmp(y1hi, y2lo) < 0 || cmp(y2hi, y1lo) < 0) return out;
  }

  Point d1(s1.b.x - s1.a.x, s1.b.y - s1.a.y);
  Point d2(s2.b.x - s2.a.x, s2.b.y - s2.a.y);
  Rational denom = d1.x * d2.y - d1.y * d2.x;

  if (sgn(denom) != 0) {
    Rational qp_x = s2.a.x - s1.a.x;
    Rational qp_y = s2.a.y - s1.a.y;
    Rational t = (qp_x * d2.y - qp_y * d2.x) / denom;
    Rational u = (qp_x * d1.y - qp_y * d1.x) / denom;
    if (sgn(t) < 0 || cmp(t, 1) > 0 || sgn(u) < 0 || cmp(u, 1) > 0) return out;
    out.kind = SegIntersection::Kind::SinglePoint;
    out.point = Point(s1.a.x + t * d1.x, s1.a.y + t * d1.y);
    return out;
  }

  // Parallel. Distinct lines cannot meet.
  if (orientation(s1.a, s1.b, s2.a) != Orientation::Collinear) return out;

  // Collinear: overlap interval along the dominant axis.
  bool use_x = cmp(abs(d1.x), abs(d1.y)) >= 0;
  auto key = [&](const Point& p) { return use_x ? p.x : p.y; };
  Point a1 = s1.a, b1 = s1.b, a2 = s2.a, b2 = s2.b;
  if (cmp(key(a1), key(b1)) > 0) std::swap(a1, b1);
  if (cmp(key(a2), key(b2)) > 0) std::swap(a2, b2);
  const Point& lo = cmp(key(a1), key(a2)) >= 0 ? a1 : a2;
  const Point& hi = cmp(key(b1), key(b2)) <= 0 ? b1 : b2;
  int c = cmp(key(lo), key(hi));
  if (c > 0) return out;
  if (c == 0) {
    out.kind = SegIntersection::Kind::SinglePoint;
    out.point = lo;
    return out;
  }
  out.kind = SegIntersection::Kind::Subsegment;
  out.sub = Segment(lo, hi);
  return out;
}

Rational signed_area2(std::span<const Point> polygon) {
  Rational acc = 0;
  std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = polygon[i];
    const Point& q = polygon[(i + 1) % n];
    acc += p.x * q.y - q.x * p.y;
  }
  return acc;
}

PointLocation point_in_edge_set(const Point& p, std::span<const Segment> edges) {
  for (const Segment& e : edges)
    if (on_segment(p, e)) return PointLocation::Boundary;
  // Half-open crossing rule on the rightward horizontal ray; horizontal
  // edges never straddle and vertices are counted once.
  int crossings = 0;
  for (const Segment& e : edges) {
    bool a_above = cmp(e.a.y, p.y) > 0;
    bool b_above = cmp(e.b.y, p.y) > 0;
    if (a_above == b_above) continue;
    // x of the edge at height p.y, compared to p.x
    Rational t = (p.y - e.a.y) / (e.b.y - e.a.y);
    Rational x = e.a.x + t * (e.b.x - e.a.x);
    if (cmp(x, p.x) > 0) ++crossings;
  }
  return (crossings % 2 == 1) ? PointLocation::Inside : PointLocation::Outside;
}

namespace {

std::vector<Segment> ring_edges(const std::vector<Point>& verts) {
  std::vector<Segment> edges;
  edges.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    edges.emplace_back(verts[i], verts[(i + 1) % verts.size()]);
  return edges;
}

}  // namespace

PointLocation point_in_ring(const Point& p, const Ring& r) {
  auto edges = ring_edges(r.vertices());
  return point_in_edge_set(p, edges);
}

Ring Ring::validate(std::vector<Point> candidate) {
  std::vector<Point>& v = candidate;

  // Drop consecutive duplicates, including the wraparound pair.
  auto dedupe = [&]() {
    std::vector<Point> keep;
    for (const Point& p : v)
      if (keep.empty() || !(keep.back() == p)) keep.push_back(p);
    while (keep.size() > 1 && keep.front() == keep.back()) keep.pop_back();
    v = std::move(keep);
  };
  dedupe();
  if (v.size() < 3) fail(Err::DegenerateRing, "fewer than 3 distinct vertices");

  // Remove straight-through collinear vertices; folds are left in place and
  // rejected below as self-intersections.
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point& prev = v[(i + v.size() - 1) % v.size()];
      const Point& cur = v[i];
      const Point& next = v[(i + 1) % v.size()];
      if (orientation(prev, cur, next) != Orientation::Collinear) continue;
      Rational d = (cur.x - prev.x) * (next.x - cur.x) + (cur.y - prev.y) * (next.y - cur.y);
      if (sgn(d) > 0) {  // strictly between
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (v.size() < 3) fail(Err::DegenerateRing, "collinear vertex chain");
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& prev = v[(i + v.size() - 1) % v.size()];
    const Point& next = v[(i + 1) % v.size()];
    if (orientation(prev, v[i], next) == Orientation::Collinear)
      fail(Err::SelfIntersection, "adjacent edges fold back at " + point_str(v[i]));
  }

  // Pairwise edge checks: adjacent edges meet exactly at the shared vertex,
  // non-adjacent edges are disjoint. Runs before the area test so bowties
  // with cancelling lobes report as self-intersections.
  std::size_t n = v.size();
  auto edges = ring_edges(v);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      SegIntersection x = segment_intersection(edges[i], edges[j]);
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        const Point& shared = (j == i + 1) ? v[j] : v[0];
        if (x.kind != SegIntersection::Kind::SinglePoint || !(x.point == shared))
          fail(Err::SelfIntersection,
               "adjacent edges overlap near " + point_str(shared));
      } else if (x.kind != SegIntersection::Kind::Empty) {
        fail(Err::SelfIntersection, "non-adjacent edges intersect");
      }
    }
  }

  Rational area2 = signed_area2(v);
  if (sgn(area2) == 0) fail(Err::DegenerateRing, "zero area");
  if (sgn(area2) < 0) std::reverse(v.begin(), v.end());

  // Canonical rotation: smallest vertex first.
  auto smallest = std::min_element(v.begin(), v.end());
  std::rotate(v.begin(), smallest, v.end());
  return Ring(std::move(v));
}

Rational Ring::area() const {
  Rational a2 = signed_area2(verts_);
  return a2 / 2;
}

PointLocation Ring::contains(const Point& p) const {
  return point_in_ring(p, *this);
}

std::string Ring::canonical_key() const {
  std::ostringstream os;
  for (const Point& p : verts_) os << point_str(p) << ";";
  return os.str();
}

Ring Ring::transformed(const Rational& m00, const Rational& m01,
                       const Rational& m10, const Rational& m11,
                       const Rational& tx, const Rational& ty) const {
  std::vector<Point> pts;
  pts.reserve(verts_.size());
  for (const Point& p : verts_)
    pts.emplace_back(m00 * p.x + m01 * p.y + tx, m10 * p.x + m11 * p.y + ty);
  return validate(std::move(pts));
}

const char* err_name(Err code) {
  switch (code) {
    case Err::SelfIntersection: return "SelfIntersection";
    case Err::DegenerateRing: return "DegenerateRing";
    case Err::EmptyRegion: return "EmptyRegion";
    case Err::UnboundedRegion: return "UnboundedRegion";
    case Err::DisconnectedLinkage: return "DisconnectedLinkage";
    case Err::ParityViolation: return "ParityViolation";
    case Err::RootNotAllowed: return "RootNotAllowed";
    case Err::HasChildren: return "HasChildren";
    case Err::RootParentCollapse: return "RootParentCollapse";
    case Err::EmptyResult: return "EmptyResult";
    case Err::SyntaxError: return "SyntaxError";
    case Err::UnknownRingRef: return "UnknownRingRef";
    case Err::BadRational: return "BadRational";
    case Err::IncompleteTable: return "IncompleteTable";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace rtopo
