/* Apache License, Version 2.0 */
#include "rtopo/relate.hpp"

#include <algorithm>

namespace rtopo {

std::string NineIntersection::str() const {
  std::string s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += m[i][j] ? 'T' : 'F';
  return s;
}

NineIntersection NineIntersection::transposed() const {
  NineIntersection t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t.m[j][i] = m[i][j];
  return t;
}

const char* rcc8_str(Rcc8 r) {
  switch (r) {
    case Rcc8::DC: return "DC";
    case Rcc8::EC: return "EC";
    case Rcc8::PO: return "PO";
    case Rcc8::TPP: return "TPP";
    case Rcc8::NTPP: return "NTPP";
    case Rcc8::TPPi: return "TPPi";
    case Rcc8::NTPPi: return "NTPPi";
    case Rcc8::EQ: return "EQ";
  }
  return "?";
}

static NineIntersection from_pattern(const char* p) {
  NineIntersection n;
  for (int i = 0; i < 9; ++i) n.m[i / 3][i % 3] = (p[i] == 'T');
  return n;
}

NineIntersection rcc8_matrix(Rcc8 r) {
  switch (r) {
    case Rcc8::DC: return from_pattern("FFTFFTTTT");
    case Rcc8::EC: return from_pattern("FFTFTTTTT");
    case Rcc8::PO: return from_pattern("TTTTTTTTT");
    case Rcc8::TPP: return from_pattern("TFFTTFTTT");
    case Rcc8::NTPP: return from_pattern("TFFTFFTTT");
    case Rcc8::TPPi: return from_pattern("TTTFTTFFT");
    case Rcc8::NTPPi: return from_pattern("TTTFFTFFT");
    case Rcc8::EQ: return from_pattern("TFFFTFFFT");
  }
  fail(Err::Internal, "bad rcc8 value");
}

std::optional<Rcc8> rcc8_name(const NineIntersection& m) {
  static const Rcc8 all[] = {Rcc8::DC,  Rcc8::EC,   Rcc8::PO,    Rcc8::TPP,
                             Rcc8::NTPP, Rcc8::TPPi, Rcc8::NTPPi, Rcc8::EQ};
  for (Rcc8 r : all)
    if (rcc8_matrix(r) == m) return r;
  return std::nullopt;
}

namespace {

std::vector<Segment> edges_of(const Ring& r) {
  std::vector<Segment> out;
  out.reserve(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out.push_back(r.edge(i));
  return out;
}

// Splits `edges` at every recorded cut point; for each open piece decides
// whether it lies on the other boundary or strictly inside/outside, and
// feeds the matrix rows for this side. `row` selects which region the
// pieces' boundary belongs to (0: rows of M, 1: columns of M).
void classify_side(const std::vector<Segment>& edges,
                   std::vector<std::vector<Point>>& cuts,
                   const std::vector<Segment>& other_edges, const Ring& other,
                   int side, NineIntersection& M) {
  auto set = [&](int self_part, int other_part) {
    if (side == 0)
      M.m[self_part][other_part] = true;
    else
      M.m[other_part][self_part] = true;
  };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& pts = cuts[i];
    pts.push_back(edges[i].a);
    pts.push_back(edges[i].b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      Point mid((pts[k].x + pts[k + 1].x) / 2, (pts[k].y + pts[k + 1].y) / 2);
      const Segment* host = nullptr;
      for (const Segment& oe : other_edges)
        if (on_segment(mid, oe)) {
          host = &oe;
          break;
        }
      if (host) {
        // Shared subsegment: interiors lie on the same side exactly when
        // the two edges run the same way.
        Rational dot = (edges[i].b.x - edges[i].a.x) * (host->b.x - host->a.x) +
                       (edges[i].b.y - edges[i].a.y) * (host->b.y - host->a.y);
        if (sgn(dot) > 0) {
          M.m[0][0] = true;
          M.m[2][2] = true;
        } else {
          M.m[0][2] = true;
          M.m[2][0] = true;
        }
        M.m[1][1] = true;
        continue;
      }
      PointLocation loc = point_in_ring(mid, other);
      if (loc == PointLocation::Inside) {
        set(1, 0);  // this boundary piece in the other's interior
        set(0, 0);
        set(2, 0);
      } else {
        set(1, 2);
        set(0, 2);
        set(2, 2);
      }
    }
  }
}

}  // namespace

NineIntersection ring_pair_nine_intersection(const Ring& p, const Ring& q) {
  NineIntersection M;
  M.m[2][2] = true;  // both bounded

  auto pe = edges_of(p);
  auto qe = edges_of(q);
  std::vector<std::vector<Point>> pcuts(pe.size()), qcuts(qe.size());
  for (std::size_t i = 0; i < pe.size(); ++i) {
    for (std::size_t j = 0; j < qe.size(); ++j) {
      SegIntersection x = segment_intersection(pe[i], qe[j]);
      switch (x.kind) {
        case SegIntersection::Kind::Empty:
          break;
        case SegIntersection::Kind::SinglePoint:
          M.m[1][1] = true;
          pcuts[i].push_back(x.point);
          qcuts[j].push_back(x.point);
          break;
        case SegIntersection::Kind::Subsegment:
          M.m[1][1] = true;
          pcuts[i].push_back(x.sub.a);
          pcuts[i].push_back(x.sub.b);
          qcuts[j].push_back(x.sub.a);
          qcuts[j].push_back(x.sub.b);
          break;
      }
    }
  }
  classify_side(pe, pcuts, qe, q, 0, M);
  classify_side(qe, qcuts, pe, p, 1, M);
  return M;
}

bool Overlay::pair_present(int i, int j) const {
  for (const auto& c : face_cls)
    if (c[0] == i && c[1] == j) return true;
  for (const auto& c : edge_cls)
    if (c[0] == i && c[1] == j) return true;
  for (const auto& c : vertex_cls)
    if (c[0] == i && c[1] == j) return true;
  return false;
}

Overlay make_overlay(const Region& a, const Region& b) {
  std::vector<Segment> segs = a.boundary_segments();
  std::vector<std::uint32_t> tags(segs.size(), 1u);
  for (const Segment& s : b.boundary_segments()) {
    segs.push_back(s);
    tags.push_back(2u);
  }
  Overlay ov{Arrangement::build(segs, tags), {}, {}, {}};
  const Arrangement& arr = ov.arr;

  auto a_edges = a.boundary_segments();
  auto b_edges = b.boundary_segments();
  auto side_class = [&](const Point& pt, const std::vector<Segment>& bnd) {
    PointLocation loc = point_in_edge_set(pt, bnd);
    if (loc == PointLocation::Boundary)
      fail(Err::Internal, "overlay probe on boundary");
    return loc == PointLocation::Inside ? 0 : 2;
  };

  ov.face_cls.resize(arr.face_count());
  ov.face_cls[0] = {2, 2};
  for (std::size_t f = 1; f < arr.face_count(); ++f) {
    Point s = arr.face_sample(static_cast<int>(f));
    ov.face_cls[f] = {side_class(s, a_edges), side_class(s, b_edges)};
  }
  ov.edge_cls.resize(arr.edge_count());
  for (std::size_t e = 0; e < arr.edge_count(); ++e) {
    Segment s = arr.edge_segment(static_cast<int>(e));
    Point mid((s.a.x + s.b.x) / 2, (s.a.y + s.b.y) / 2);
    std::uint32_t t = arr.edges()[e].tags;
    ov.edge_cls[e] = {(t & 1u) ? 1 : side_class(mid, a_edges),
                      (t & 2u) ? 1 : side_class(mid, b_edges)};
  }
  ov.vertex_cls.resize(arr.vertex_count());
  for (std::size_t v = 0; v < arr.vertex_count(); ++v) {
    std::uint32_t t = 0;
    for (int h : arr.vertex_out(static_cast<int>(v)))
      t |= arr.edges()[static_cast<std::size_t>(h / 2)].tags;
    const Point& pt = arr.vertices()[v];
    ov.vertex_cls[v] = {(t & 1u) ? 1 : side_class(pt, a_edges),
                        (t & 2u) ? 1 : side_class(pt, b_edges)};
  }
  return ov;
}

NineIntersection nine_intersection_global(const Region& a, const Region& b) {
  Overlay ov = make_overlay(a, b);
  NineIntersection M;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M.m[i][j] = ov.pair_present(i, j);
  M.m[2][2] = true;
  return M;
}

const NineIntersection& AtomRelationTable::at(std::size_t i, std::size_t j) const {
  if (i >= rows || j >= cols || cells.size() != rows * cols)
    fail(Err::IncompleteTable, "atom pair missing from relation table");
  return cells[i * cols + j];
}

bool AtomRelationTable::subset(std::size_t i, std::size_t j) const {
  const NineIntersection& n = at(i, j);
  return !n.m[0][2] && !n.m[1][2];
}

AtomRelationTable build_atom_relation_table(const AtomsSummary& a,
                                            const AtomsSummary& b) {
  AtomRelationTable t;
  t.rows = a.rings.size();
  t.cols = b.rings.size();
  t.cells.reserve(t.rows * t.cols);
  for (std::size_t i = 0; i < t.rows; ++i)
    for (std::size_t j = 0; j < t.cols; ++j)
      t.cells.push_back(ring_pair_nine_intersection(a.rings[i], b.rings[j]));
  return t;
}

namespace {

// Interior-interior intersection of two bounded components, each a simple
// region with holes, decided from atom matrices alone: the generalized
// rings must overlap and neither may sit inside a hole of the other.
// Rows of `t` index atoms of the first region.
bool bounded_interiors_meet(const AtomsSummary::BoundedComp& ca,
                            const AtomsSummary::BoundedComp& cb,
                            const AtomRelationTable& t) {
  auto cell = [&](int i, int j) -> const NineIntersection& {
    return t.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  };
  if (!cell(ca.generalized_atom, cb.generalized_atom).m[0][0]) return false;
  for (int h : cb.hole_atoms) {
    const NineIntersection& n = cell(ca.generalized_atom, h);
    if (!n.m[0][2] && !n.m[1][2]) return false;  // ca's ring inside the hole
  }
  for (int h : ca.hole_atoms) {
    const NineIntersection& n = cell(h, cb.generalized_atom);
    if (!n.m[2][0] && !n.m[2][1]) return false;  // cb's ring inside the hole
  }
  return true;
}

// Interior of a bounded component against the interior of the other
// region's unbounded component: empty exactly when the component sits
// inside one of the pieces of the other generalized region.
bool meets_unbounded(const AtomsSummary::BoundedComp& ca,
                     const AtomsSummary& other, const AtomRelationTable& t,
                     bool transposed) {
  for (int g : other.ghat_atoms) {
    const NineIntersection& n =
        transposed ? t.at(static_cast<std::size_t>(g), static_cast<std::size_t>(ca.generalized_atom))
                   : t.at(static_cast<std::size_t>(ca.generalized_atom), static_cast<std::size_t>(g));
    bool sub = transposed ? (!n.m[2][0] && !n.m[2][1]) : (!n.m[0][2] && !n.m[1][2]);
    if (sub) return false;
  }
  return true;
}

}  // namespace

DegreeReport degrees_from_table(const AtomsSummary& a, const AtomsSummary& b,
                                const AtomRelationTable& t) {
  DegreeReport r;
  r.deg_plus_a.assign(static_cast<std::size_t>(a.component_count), 0);
  r.deg_a.assign(static_cast<std::size_t>(a.component_count), 0);
  r.deg_plus_b.assign(static_cast<std::size_t>(b.component_count), 0);
  r.deg_b.assign(static_cast<std::size_t>(b.component_count), 0);

  for (const auto& ca : a.comps) {
    int dp = 0, d = 0;
    for (const auto& cb : b.comps) {
      if (!bounded_interiors_meet(ca, cb, t)) continue;
      ++d;
      if (cb.kind == ComponentKind::Positive) ++dp;
    }
    if (meets_unbounded(ca, b, t, false)) ++d;
    r.deg_plus_a[static_cast<std::size_t>(ca.component)] = dp;
    r.deg_a[static_cast<std::size_t>(ca.component)] = d;
  }
  {
    // the unbounded component of A
    int dp = 0, d = 1;  // the two unbounded interiors always meet
    for (const auto& cb : b.comps) {
      if (!meets_unbounded(cb, a, t, true)) continue;
      ++d;
      if (cb.kind == ComponentKind::Positive) ++dp;
    }
    r.deg_plus_a[static_cast<std::size_t>(a.unbounded_component)] = dp;
    r.deg_a[static_cast<std::size_t>(a.unbounded_component)] = d;
  }

  for (const auto& cb : b.comps) {
    int dp = 0, d = 0;
    for (const auto& ca : a.comps) {
      if (!bounded_interiors_meet(ca, cb, t)) continue;
      ++d;
      if (ca.kind == ComponentKind::Positive) ++dp;
    }
    if (meets_unbounded(cb, a, t, true)) ++d;
    r.deg_plus_b[static_cast<std::size_t>(cb.component)] = dp;
    r.deg_b[static_cast<std::size_t>(cb.component)] = d;
  }
  {
    int dp = 0, d = 1;
    for (const auto& ca : a.comps) {
      if (!meets_unbounded(ca, b, t, false)) continue;
      ++d;
      if (ca.kind == ComponentKind::Positive) ++dp;
    }
    r.deg_plus_b[static_cast<std::size_t>(b.unbounded_component)] = dp;
    r.deg_b[static_cast<std::size_t>(b.unbounded_component)] = d;
  }
  return r;
}

DegreeReport degrees(const Region& a, const Region& b) {
  const AtomsSummary& sa = a.atoms_summary();
  const AtomsSummary& sb = b.atoms_summary();
  return degrees_from_table(sa, sb, build_atom_relation_table(sa, sb));
}

NineIntersection nine_intersection_local(const AtomsSummary& a,
                                         const AtomsSummary& b,
                                         const AtomRelationTable& t) {
  if (t.rows != a.rings.size() || t.cols != b.rings.size())
    fail(Err::IncompleteTable, "table does not cover the atom cross product");

  NineIntersection M;
  M.m[2][2] = true;
  DegreeReport deg = degrees_from_table(a, b, t);

  // boundary-boundary: some atom boundaries of positive components touch
  for (const auto& ca : a.comps) {
    if (ca.kind != ComponentKind::Positive) continue;
    std::vector<int> aa = ca.hole_atoms;
    aa.push_back(ca.generalized_atom);
    for (const auto& cb : b.comps) {
      if (cb.kind != ComponentKind::Positive) continue;
      std::vector<int> bb = cb.hole_atoms;
      bb.push_back(cb.generalized_atom);
      for (int i : aa)
        for (int j : bb)
          if (t.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).m[1][1])
            M.m[1][1] = true;
    }
  }

  for (const auto& ca : a.comps) {
    if (ca.kind != ComponentKind::Positive) continue;
    if (deg.deg_plus_a[static_cast<std::size_t>(ca.component)] > 0) M.m[0][0] = true;
    if (deg.deg_a[static_cast<std::size_t>(ca.component)] > 1) M.m[0][1] = true;
  }
  for (const auto& cb : b.comps) {
    if (cb.kind != ComponentKind::Positive) continue;
    if (deg.deg_b[static_cast<std::size_t>(cb.component)] > 1) M.m[1][0] = true;
  }

  // interior-exterior and boundary-exterior via the unbounded/hole degrees
  if (deg.deg_plus_b[static_cast<std::size_t>(b.unbounded_component)] > 0) M.m[0][2] = true;
  if (deg.deg_b[static_cast<std::size_t>(b.unbounded_component)] > 1) M.m[1][2] = true;
  for (const auto& cb : b.comps) {
    if (cb.kind != ComponentKind::Hole) continue;
    if (deg.deg_plus_b[static_cast<std::size_t>(cb.component)] > 0) M.m[0][2] = true;
    if (deg.deg_b[static_cast<std::size_t>(cb.component)] > 1) M.m[1][2] = true;
  }
  if (deg.deg_plus_a[static_cast<std::size_t>(a.unbounded_component)] > 0) M.m[2][0] = true;
  if (deg.deg_a[static_cast<std::size_t>(a.unbounded_component)] > 1) M.m[2][1] = true;
  for (const auto& ca : a.comps) {
    if (ca.kind != ComponentKind::Hole) continue;
    if (deg.deg_plus_a[static_cast<std::size_t>(ca.component)] > 0) M.m[2][0] = true;
    if (deg.deg_a[static_cast<std::size_t>(ca.component)] > 1) M.m[2][1] = true;
  }
  return M;
}

NineIntersection nine_intersection_local(const Region& a, const Region& b) {
  const AtomsSummary& sa = a.atoms_summary();
  const AtomsSummary& sb = b.atoms_summary();
  return nine_intersection_local(sa, sb, build_atom_relation_table(sa, sb));
}

LocalGlobalCheck verify_local_equals_global(const Region& a, const Region& b) {
  LocalGlobalCheck out{nine_intersection_local(a, b),
                       nine_intersection_global(a, b), false};
  out.agree = (out.local == out.global);
  return out;
}

}  // namespace rtopo
