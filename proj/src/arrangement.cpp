/* Apache License, Version 2.0 */
#include "rtopo/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rtopo {

namespace {

struct Dir {
  Rational x, y;
};

// CCW angular order starting from the positive x axis.
bool dir_less(const Dir& a, const Dir& b) {
  auto half = [](const Dir& d) {
    return (sgn(d.y) > 0 || (sgn(d.y) == 0 && sgn(d.x) > 0)) ? 0 : 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return sgn(a.x * b.y - a.y * b.x) > 0;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool bbox_overlap(const Segment& s, const Segment& t) {
  auto lo = [](const Rational& a, const Rational& b) { return cmp(a, b) <= 0 ? a : b; };
  auto hi = [](const Rational& a, const Rational& b) { return cmp(a, b) <= 0 ? b : a; };
  if (cmp(hi(s.a.x, s.b.x), lo(t.a.x, t.b.x)) < 0) return false;
  if (cmp(hi(t.a.x, t.b.x), lo(s.a.x, s.b.x)) < 0) return false;
  if (cmp(hi(s.a.y, s.b.y), lo(t.a.y, t.b.y)) < 0) return false;
  if (cmp(hi(t.a.y, t.b.y), lo(s.a.y, s.b.y)) < 0) return false;
  return true;
}

}  // namespace

Arrangement Arrangement::build(const std::vector<Segment>& segments,
                               const std::vector<std::uint32_t>& tags) {
  Arrangement arr;
  if (!tags.empty() && tags.size() != segments.size())
    fail(Err::Internal, "tag list length mismatch");

  // Merge exact duplicate input segments up front.
  std::map<std::pair<Point, Point>, std::uint32_t> uniq;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment& s = segments[i];
    if (s.a == s.b) fail(Err::Internal, "degenerate input segment");
    auto key = s.a < s.b ? std::make_pair(s.a, s.b) : std::make_pair(s.b, s.a);
    uniq[key] |= tags.empty() ? 0u : tags[i];
  }
  std::vector<Segment> segs;
  std::vector<std::uint32_t> stags;
  segs.reserve(uniq.size());
  for (auto& [key, t] : uniq) {
    segs.emplace_back(key.first, key.second);
    stags.push_back(t);
  }

  // Split every segment at every intersection with every other segment.
  std::vector<std::vector<Point>> cuts(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i) {
    cuts[i].push_back(segs[i].a);
    cuts[i].push_back(segs[i].b);
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (!bbox_overlap(segs[i], segs[j])) continue;
      SegIntersection x = segment_intersection(segs[i], segs[j]);
      switch (x.kind) {
        case SegIntersection::Kind::Empty:
          break;
        case SegIntersection::Kind::SinglePoint:
          cuts[i].push_back(x.point);
          cuts[j].push_back(x.point);
          break;
        case SegIntersection::Kind::Subsegment:
          cuts[i].push_back(x.sub.a);
          cuts[i].push_back(x.sub.b);
          cuts[j].push_back(x.sub.a);
          cuts[j].push_back(x.sub.b);
          break;
      }
    }
  }

  std::map<std::pair<Point, Point>, std::uint32_t> subsegs;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    std::sort(cuts[i].begin(), cuts[i].end());
    cuts[i].erase(std::unique(cuts[i].begin(), cuts[i].end()), cuts[i].end());
    // All cut points are collinear on the segment; lexicographic order is
    // the order along it.
    for (std::size_t k = 0; k + 1 < cuts[i].size(); ++k) {
      auto key = std::make_pair(cuts[i][k], cuts[i][k + 1]);
      subsegs[key] |= stags[i];
    }
  }

  std::map<Point, int> vid;
  auto vertex_id = [&](const Point& p) {
    auto it = vid.find(p);
    if (it != vid.end()) return it->second;
    int id = static_cast<int>(arr.verts_.size());
    arr.verts_.push_back(p);
    vid.emplace(p, id);
    return id;
  };
  for (auto& [key, t] : subsegs) {
    EdgeRec e;
    e.v0 = vertex_id(key.first);
    e.v1 = vertex_id(key.second);
    e.tags = t;
    arr.edges_.push_back(e);
  }

  std::size_t ne = arr.edges_.size();
  arr.hes_.resize(2 * ne);
  arr.vertex_out_.assign(arr.verts_.size(), {});
  for (std::size_t e = 0; e < ne; ++e) {
    arr.hes_[2 * e].origin = arr.edges_[e].v0;
    arr.hes_[2 * e + 1].origin = arr.edges_[e].v1;
    arr.vertex_out_[arr.edges_[e].v0].push_back(static_cast<int>(2 * e));
    arr.vertex_out_[arr.edges_[e].v1].push_back(static_cast<int>(2 * e + 1));
  }

  auto he_dir = [&](int h) {
    const Point& o = arr.verts_[arr.hes_[h].origin];
    const Point& t = arr.verts_[arr.hes_[h ^ 1].origin];
    return Dir{t.x - o.x, t.y - o.y};
  };
  std::vector<int> pos_at_origin(2 * ne, -1);
  for (std::size_t v = 0; v < arr.verts_.size(); ++v) {
    auto& out = arr.vertex_out_[v];
    std::sort(out.begin(), out.end(), [&](int h1, int h2) {
      return dir_less(he_dir(h1), he_dir(h2));
    });
    for (std::size_t k = 0; k < out.size(); ++k)
      pos_at_origin[out[k]] = static_cast<int>(k);
  }

  // next(h): clockwise neighbour of twin(h) around the target vertex.
  for (std::size_t h = 0; h < 2 * ne; ++h) {
    int tw = static_cast<int>(h ^ 1);
    int v = arr.hes_[tw].origin;
    const auto& out = arr.vertex_out_[v];
    int k = pos_at_origin[tw];
    arr.hes_[h].next = out[(k + out.size() - 1) % out.size()];
  }

  // Walk orbits and collect twice-signed areas.
  for (std::size_t h = 0; h < 2 * ne; ++h) {
    if (arr.hes_[h].orbit >= 0) continue;
    Orbit orbit;
    orbit.area2 = 0;
    int id = static_cast<int>(arr.orbits_.size());
    int cur = static_cast<int>(h);
    do {
      arr.hes_[cur].orbit = id;
      orbit.halfedges.push_back(cur);
      const Point& o = arr.verts_[arr.hes_[cur].origin];
      const Point& t = arr.verts_[arr.he_target(cur)];
      orbit.area2 += o.x * t.y - t.x * o.y;
      cur = arr.hes_[cur].next;
    } while (cur != static_cast<int>(h));
    arr.orbits_.push_back(std::move(orbit));
  }

  // Faces: one per positive orbit, plus the unbounded face 0.
  arr.faces_.emplace_back();
  arr.faces_[0].area = 0;
  for (std::size_t i = 0; i < arr.orbits_.size(); ++i) {
    if (sgn(arr.orbits_[i].area2) > 0) {
      Face f;
      f.outer = static_cast<int>(i);
      f.area = arr.orbits_[i].area2 / 2;
      arr.orbits_[i].face = static_cast<int>(arr.faces_.size());
      arr.faces_.push_back(std::move(f));
    }
  }
  // Inner walks attach to the face of the smallest positive walk strictly
  // containing a probe point on them.
  for (std::size_t i = 0; i < arr.orbits_.size(); ++i) {
    if (sgn(arr.orbits_[i].area2) > 0) continue;
    int h0 = arr.orbits_[i].halfedges.front();
    const Point& o = arr.verts_[arr.hes_[h0].origin];
    const Point& t = arr.verts_[arr.he_target(h0)];
    Point probe((o.x + t.x) / 2, (o.y + t.y) / 2);
    int best = -1;
    for (std::size_t j = 0; j < arr.orbits_.size(); ++j) {
      if (sgn(arr.orbits_[j].area2) <= 0) continue;
      if (best >= 0 &&
          cmp(arr.orbits_[j].area2, arr.orbits_[static_cast<std::size_t>(best)].area2) >= 0)
        continue;
      if (arr.orbit_contains(static_cast<int>(j), probe))
        best = static_cast<int>(j);
    }
    int face = best < 0 ? 0 : arr.orbits_[static_cast<std::size_t>(best)].face;
    arr.orbits_[i].face = face;
    arr.faces_[static_cast<std::size_t>(face)].inner.push_back(static_cast<int>(i));
  }
  // Face area = outer walk area plus the (negative) inner walk areas.
  for (std::size_t f = 1; f < arr.faces_.size(); ++f) {
    Rational a2 = arr.orbits_[static_cast<std::size_t>(arr.faces_[f].outer)].area2;
    for (int inner : arr.faces_[f].inner)
      a2 += arr.orbits_[static_cast<std::size_t>(inner)].area2;
    arr.faces_[f].area = a2 / 2;
  }

  // Input components, then Euler's formula as a structural self-check.
  UnionFind uf(arr.verts_.size());
  for (const EdgeRec& e : arr.edges_) uf.unite(e.v0, e.v1);
  std::vector<int> roots;
  for (std::size_t v = 0; v < arr.verts_.size(); ++v)
    if (uf.find(static_cast<int>(v)) == static_cast<int>(v)) roots.push_back(static_cast<int>(v));
  arr.components_ = static_cast<int>(roots.size());
  if (!arr.euler_ok()) fail(Err::Internal, "Euler check failed on arrangement");
  return arr;
}

bool Arrangement::orbit_contains(int orbit, const Point& p) const {
  int crossings = 0;
  for (int h : orbits_[static_cast<std::size_t>(orbit)].halfedges) {
    const Point& a = verts_[hes_[h].origin];
    const Point& b = verts_[he_target(h)];
    if (on_segment(p, Segment(a, b))) return false;  // not strict
    bool a_above = cmp(a.y, p.y) > 0;
    bool b_above = cmp(b.y, p.y) > 0;
    if (a_above == b_above) continue;
    Rational t = (p.y - a.y) / (b.y - a.y);
    Rational x = a.x + t * (b.x - a.x);
    if (cmp(x, p.x) > 0) ++crossings;
  }
  return crossings % 2 == 1;
}

Feature Arrangement::locate(const Point& p) const {
  for (std::size_t v = 0; v < verts_.size(); ++v)
    if (verts_[v] == p) return {Feature::Kind::Vertex, static_cast<int>(v)};
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (on_segment(p, edge_segment(static_cast<int>(e))))
      return {Feature::Kind::Edge, static_cast<int>(e)};
  int best = -1;
  for (std::size_t j = 0; j < orbits_.size(); ++j) {
    if (sgn(orbits_[j].area2) <= 0) continue;
    if (best >= 0 &&
        cmp(orbits_[j].area2, orbits_[static_cast<std::size_t>(best)].area2) >= 0)
      continue;
    if (orbit_contains(static_cast<int>(j), p)) best = static_cast<int>(j);
  }
  int face = best < 0 ? 0 : orbits_[static_cast<std::size_t>(best)].face;
  return {Feature::Kind::Face, face};
}

Point Arrangement::face_sample(int face) const {
  const Face& f = faces_[static_cast<std::size_t>(face)];
  if (f.outer < 0) fail(Err::Internal, "sample of unbounded face");
  int h0 = orbits_[static_cast<std::size_t>(f.outer)].halfedges.front();
  const Point& o = verts_[hes_[h0].origin];
  const Point& t = verts_[he_target(h0)];
  Point m((o.x + t.x) / 2, (o.y + t.y) / 2);
  Rational dx = t.x - o.x, dy = t.y - o.y;
  Rational nx = -dy, ny = dx;  // face lies on the left of h0

  // First hit of the ray m + s*(nx,ny), s > 0, against any edge.
  bool have = false;
  Rational smin = 0;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Point& a = verts_[edges_[e].v0];
    const Point& b = verts_[edges_[e].v1];
    Rational ex = b.x - a.x, ey = b.y - a.y;
    Rational denom = nx * ey - ny * ex;
    if (sgn(denom) == 0) {
      // Parallel to the ray; collinear edges contribute their endpoints.
      if (sgn((a.x - m.x) * ny - (a.y - m.y) * nx) != 0) continue;
      for (const Point* q : {&a, &b}) {
        Rational s = (sgn(nx) != 0) ? (q->x - m.x) / nx : (q->y - m.y) / ny;
        if (sgn(s) > 0 && (!have || cmp(s, smin) < 0)) {
          smin = s;
          have = true;
        }
      }
      continue;
    }
    Rational s = ((a.x - m.x) * ey - (a.y - m.y) * ex) / denom;
    if (sgn(s) <= 0) continue;
    Rational u = ((a.x - m.x) * ny - (a.y - m.y) * nx) / denom;
    if (sgn(u) < 0 || cmp(u, 1) > 0) continue;
    if (!have || cmp(s, smin) < 0) {
      smin = s;
      have = true;
    }
  }
  if (!have) fail(Err::Internal, "face sample ray found no boundary");
  Rational s2 = smin / 2;
  return Point(m.x + s2 * nx, m.y + s2 * ny);
}

bool Arrangement::euler_ok() const {
  long v = static_cast<long>(verts_.size());
  long e = static_cast<long>(edges_.size());
  long f = static_cast<long>(faces_.size());
  return v - e + f == 1 + components_;
}

}  // namespace rtopo
