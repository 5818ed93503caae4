/* Apache License, Version 2.0 */
#include "rtopo/region.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rtopo {

RegionExpr RegionExpr::make_ref(std::string name) {
  RegionExpr e;
  e.op = Op::Ref;
  e.ref = std::move(name);
  return e;
}

RegionExpr RegionExpr::make_union(std::vector<RegionExpr> args) {
  RegionExpr e;
  e.op = Op::Union;
  e.args = std::move(args);
  return e;
}

RegionExpr RegionExpr::make_intersection(std::vector<RegionExpr> args) {
  RegionExpr e;
  e.op = Op::Intersection;
  e.args = std::move(args);
  return e;
}

RegionExpr RegionExpr::make_difference(RegionExpr a, RegionExpr b) {
  RegionExpr e;
  e.op = Op::Difference;
  e.args.push_back(std::move(a));
  e.args.push_back(std::move(b));
  return e;
}

RegionExpr RegionExpr::make_complement(RegionExpr a) {
  RegionExpr e;
  e.op = Op::Complement;
  e.args.push_back(std::move(a));
  return e;
}

void RegionExpr::collect_refs(std::vector<std::string>& out) const {
  if (op == Op::Ref) {
    out.push_back(ref);
    return;
  }
  for (const RegionExpr& a : args) a.collect_refs(out);
}

bool RegionExpr::evaluate(const std::map<std::string, bool>& leaf_values) const {
  switch (op) {
    case Op::Ref: {
      auto it = leaf_values.find(ref);
      if (it == leaf_values.end()) fail(Err::UnknownRingRef, "ring '" + ref + "'");
      return it->second;
    }
    case Op::Union:
      for (const RegionExpr& a : args)
        if (a.evaluate(leaf_values)) return true;
      return false;
    case Op::Intersection:
      for (const RegionExpr& a : args)
        if (!a.evaluate(leaf_values)) return false;
      return true;
    case Op::Difference:
      return args[0].evaluate(leaf_values) && !args[1].evaluate(leaf_values);
    case Op::Complement:
      return !args[0].evaluate(leaf_values);
  }
  fail(Err::Internal, "bad expression node");
}

const char* component_kind_str(ComponentKind k) {
  switch (k) {
    case ComponentKind::Positive: return "positive";
    case ComponentKind::Hole: return "hole";
    case ComponentKind::Unbounded: return "unbounded";
  }
  return "?";
}

const char* shape_class_str(ShapeClass s) {
  switch (s) {
    case ShapeClass::Simple: return "SIMPLE";
    case ShapeClass::SimpleWithHoles: return "SIMPLE_WITH_HOLES";
    case ShapeClass::Composite: return "COMPOSITE";
    case ShapeClass::General: return "GENERAL";
  }
  return "?";
}

namespace {

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

}  // namespace

Region Region::evaluate(const RingTable& rings, const RegionExpr& expr) {
  std::vector<std::string> refs;
  expr.collect_refs(refs);
  std::sort(refs.begin(), refs.end());
  refs.erase(std::unique(refs.begin(), refs.end()), refs.end());
  if (refs.empty()) fail(Err::EmptyRegion, "expression references no rings");

  std::vector<Segment> segs;
  for (const std::string& name : refs) {
    auto it = rings.find(name);
    if (it == rings.end()) fail(Err::UnknownRingRef, "ring '" + name + "'");
    const Ring& r = it->second;
    for (std::size_t i = 0; i < r.size(); ++i) segs.push_back(r.edge(i));
  }

  auto arr = std::make_shared<const Arrangement>(Arrangement::build(segs));

  // Face flags from one exact interior sample per face.
  std::vector<bool> inside(arr->face_count(), false);
  {
    std::map<std::string, bool> at_infinity;
    for (const std::string& name : refs) at_infinity[name] = false;
    if (expr.evaluate(at_infinity))
      fail(Err::UnboundedRegion, "expression is true at infinity");
  }
  for (std::size_t f = 1; f < arr->face_count(); ++f) {
    Point sample = arr->face_sample(static_cast<int>(f));
    std::map<std::string, bool> leaf;
    for (const std::string& name : refs) {
      PointLocation loc = point_in_ring(sample, rings.at(name));
      if (loc == PointLocation::Boundary)
        fail(Err::Internal, "face sample landed on a ring");
      leaf[name] = (loc == PointLocation::Inside);
    }
    inside[f] = expr.evaluate(leaf);
  }

  Region region;
  region.arr_ = std::move(arr);
  region.inside_ = std::move(inside);
  region.analyze();
  return region;
}

Region Region::from_flags(std::shared_ptr<const Arrangement> arr,
                          std::vector<bool> inside) {
  if (inside.size() != arr->face_count())
    fail(Err::Internal, "flag count mismatch");
  if (inside[0]) fail(Err::UnboundedRegion, "unbounded face flagged inside");
  Region region;
  region.arr_ = std::move(arr);
  region.inside_ = std::move(inside);
  region.analyze();
  return region;
}

void Region::analyze() {
  const Arrangement& arr = *arr_;
  if (inside_[0]) fail(Err::UnboundedRegion, "unbounded face flagged inside");

  // Regularization: the region is exactly closure(inside faces); edge and
  // vertex classes follow from the face flags.
  std::size_t ne = arr.edge_count();
  eclass_.resize(ne);
  boundary_edges_.clear();
  for (std::size_t e = 0; e < ne; ++e) {
    auto [fl, fr] = arr.edge_faces(static_cast<int>(e));
    bool il = inside_[static_cast<std::size_t>(fl)];
    bool ir = inside_[static_cast<std::size_t>(fr)];
    if (il != ir) {
      eclass_[e] = EdgeClass::Boundary;
      boundary_edges_.push_back(static_cast<int>(e));
    } else {
      eclass_[e] = il ? EdgeClass::InteriorEdge : EdgeClass::ExteriorEdge;
    }
  }
  vclass_.resize(arr.vertex_count());
  for (std::size_t v = 0; v < arr.vertex_count(); ++v) {
    bool any_boundary = false, any_interior = false;
    for (int h : arr.vertex_out(static_cast<int>(v))) {
      EdgeClass c = eclass_[static_cast<std::size_t>(h / 2)];
      if (c == EdgeClass::Boundary) any_boundary = true;
      if (c == EdgeClass::InteriorEdge) any_interior = true;
    }
    vclass_[v] = any_boundary ? VertexClass::Boundary
               : any_interior ? VertexClass::InteriorVertex
                              : VertexClass::ExteriorVertex;
  }

  bool has_interior = false;
  for (std::size_t f = 1; f < arr.face_count(); ++f)
    if (inside_[f]) has_interior = true;
  if (!has_interior) fail(Err::EmptyRegion, "no interior face");

  // Components: interior faces join across interior edges, exterior faces
  // across exterior edges. Vertex-only contact never connects.
  UnionFind uf(arr.face_count());
  for (std::size_t e = 0; e < ne; ++e) {
    if (eclass_[e] == EdgeClass::Boundary) continue;
    auto [fl, fr] = arr.edge_faces(static_cast<int>(e));
    uf.unite(fl, fr);
  }
  std::map<int, std::vector<int>> classes;
  for (std::size_t f = 0; f < arr.face_count(); ++f)
    classes[uf.find(static_cast<int>(f))].push_back(static_cast<int>(f));

  comps_.clear();
  comp_of_face_.assign(arr.face_count(), -1);
  int root_class = uf.find(0);
  {
    Component b0;
    b0.id = 0;
    b0.kind = ComponentKind::Unbounded;
    b0.faces = classes[root_class];
    b0.area = 0;
    comps_.push_back(std::move(b0));
  }
  for (auto& [rep, faces] : classes) {
    if (rep == root_class) continue;
    Component c;
    c.kind = inside_[static_cast<std::size_t>(faces.front())]
                 ? ComponentKind::Positive
                 : ComponentKind::Hole;
    c.faces = faces;  // already ascending (map over face ids)
    c.area = 0;
    for (int f : faces) c.area += arr.faces()[static_cast<std::size_t>(f)].area;
    comps_.push_back(std::move(c));
  }
  std::sort(comps_.begin() + 1, comps_.end(), [](const Component& a, const Component& b) {
    return a.faces.front() < b.faces.front();
  });
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    comps_[i].id = static_cast<int>(i);
    for (int f : comps_[i].faces) comp_of_face_[static_cast<std::size_t>(f)] = static_cast<int>(i);
  }

  // Linked = sharing at least one full arrangement edge.
  std::set<std::pair<int, int>> linked_pairs;
  for (int e : boundary_edges_) {
    auto [fl, fr] = arr.edge_faces(e);
    int cl = comp_of_face_[static_cast<std::size_t>(fl)];
    int cr = comp_of_face_[static_cast<std::size_t>(fr)];
    linked_pairs.insert({std::min(cl, cr), std::max(cl, cr)});
  }
  graph_.nodes.clear();
  graph_.adj.assign(comps_.size(), {});
  for (auto [a, b] : linked_pairs) {
    graph_.adj[static_cast<std::size_t>(a)].push_back(b);
    graph_.adj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& nbrs : graph_.adj) std::sort(nbrs.begin(), nbrs.end());

  // Levels: BFS distance from the unbounded component, then the +-1 law.
  std::vector<int> level(comps_.size(), -1);
  std::vector<int> queue{0};
  level[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v : graph_.adj[static_cast<std::size_t>(u)]) {
      if (level[static_cast<std::size_t>(v)] >= 0) continue;
      level[static_cast<std::size_t>(v)] = level[static_cast<std::size_t>(u)] + 1;
      queue.push_back(v);
    }
  }
  for (std::size_t i = 0; i < comps_.size(); ++i)
    if (level[i] < 0)
      fail(Err::DisconnectedLinkage,
           "component " + std::to_string(i) + " unreachable from the unbounded component");
  for (auto [a, b] : linked_pairs) {
    int d = level[static_cast<std::size_t>(a)] - level[static_cast<std::size_t>(b)];
    if (d != 1 && d != -1)
      fail(Err::ParityViolation, "linked components at equal level");
  }
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    comps_[i].level = level[i];
    graph_.nodes.push_back({static_cast<int>(i), comps_[i].kind, level[i]});
  }

  // Atom set (deduplicated by canonical ring form, roles accumulated).
  atoms_.clear();
  summary_ = AtomsSummary{};
  summary_.component_count = static_cast<int>(comps_.size());
  std::map<std::string, int> atom_index;
  auto add_atom = [&](const Ring& ring, AtomRoleEntry role) {
    std::string key = ring.canonical_key();
    auto it = atom_index.find(key);
    int idx;
    if (it == atom_index.end()) {
      idx = static_cast<int>(atoms_.size());
      atoms_.push_back(Atom{ring, {}});
      summary_.rings.push_back(ring);
      atom_index.emplace(key, idx);
    } else {
      idx = it->second;
    }
    auto& roles = atoms_[static_cast<std::size_t>(idx)].roles;
    if (std::find(roles.begin(), roles.end(), role) == roles.end())
      roles.push_back(role);
    return idx;
  };

  for (const Component& c : comps_) {
    if (c.kind == ComponentKind::Unbounded) continue;
    AtomsSummary::BoundedComp bc;
    bc.component = c.id;
    bc.kind = c.kind;
    Ring gen = trace_outer(generalized_faces_of_component(c.id)).ring;
    bc.generalized_atom = add_atom(gen, {AtomRole::GeneralizedOf, c.id});
    for (const auto& sub : hole_subgraphs(c.id)) {
      std::vector<int> faces;
      for (int node : sub)
        for (int f : comps_[static_cast<std::size_t>(node)].faces) faces.push_back(f);
      Ring hole = trace_outer(faces).ring;
      bc.hole_atoms.push_back(add_atom(hole, {AtomRole::HoleOf, c.id}));
    }
    summary_.comps.push_back(std::move(bc));
  }
  for (const auto& sub : generalized_region_subgraphs()) {
    std::vector<int> faces;
    for (int node : sub)
      for (int f : comps_[static_cast<std::size_t>(node)].faces) faces.push_back(f);
    Ring piece = trace_outer(faces).ring;
    summary_.ghat_atoms.push_back(
        add_atom(piece, {AtomRole::ComponentOfGeneralizedRegion, -1}));
  }
}

std::vector<Segment> Region::boundary_segments() const {
  std::vector<Segment> out;
  out.reserve(boundary_edges_.size());
  for (int e : boundary_edges_) out.push_back(arr_->edge_segment(e));
  return out;
}

Rational Region::area() const {
  Rational total = 0;
  for (const Component& c : comps_)
    if (c.kind == ComponentKind::Positive) total += c.area;
  return total;
}

std::vector<int> Region::positive_components() const {
  std::vector<int> out;
  for (const Component& c : comps_)
    if (c.kind == ComponentKind::Positive) out.push_back(c.id);
  return out;
}

std::vector<int> Region::hole_components() const {
  std::vector<int> out;
  for (const Component& c : comps_)
    if (c.kind == ComponentKind::Hole) out.push_back(c.id);
  return out;
}

std::optional<int> Region::component_at(const Point& p) const {
  Feature f = arr_->locate(p);
  switch (f.kind) {
    case Feature::Kind::Face:
      return comp_of_face_[static_cast<std::size_t>(f.index)];
    case Feature::Kind::Edge: {
      // off-boundary edges sit inside one component's faces
      if (eclass_[static_cast<std::size_t>(f.index)] == EdgeClass::Boundary)
        return std::nullopt;
      return comp_of_face_[static_cast<std::size_t>(arr_->edge_faces(f.index).first)];
    }
    case Feature::Kind::Vertex: {
      if (vclass_[static_cast<std::size_t>(f.index)] == VertexClass::Boundary)
        return std::nullopt;
      int h = arr_->vertex_out(f.index).front();
      return comp_of_face_[static_cast<std::size_t>(arr_->face_left(h))];
    }
  }
  return std::nullopt;
}

bool Region::linked(int c1, int c2) const {
  if (c1 == c2) return false;
  const auto& nbrs = graph_.adj[static_cast<std::size_t>(c1)];
  return std::binary_search(nbrs.begin(), nbrs.end(), c2);
}

// Connected pieces of the graph after removing `remove`, grouped; pieces
// containing `keep_root` are dropped.
static std::vector<std::vector<int>> removal_subgraphs(const LinkGraph& g,
                                                       int remove) {
  std::size_t n = g.nodes.size();
  std::vector<int> piece(n, -1);
  piece[static_cast<std::size_t>(remove)] = -2;
  int next_piece = 0;
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (piece[s] != -1) continue;
    std::vector<int> members{static_cast<int>(s)};
    piece[s] = next_piece;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (int v : g.adj[static_cast<std::size_t>(members[head])]) {
        if (piece[static_cast<std::size_t>(v)] != -1) continue;
        piece[static_cast<std::size_t>(v)] = next_piece;
        members.push_back(v);
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
    ++next_piece;
  }
  return out;
}

std::vector<std::vector<int>> Region::hole_subgraphs(int c) const {
  if (c == 0) fail(Err::RootNotAllowed, "holes of the unbounded component");
  auto pieces = removal_subgraphs(graph_, c);
  std::vector<std::vector<int>> out;
  for (auto& piece : pieces) {
    if (std::binary_search(piece.begin(), piece.end(), 0)) continue;
    out.push_back(std::move(piece));
  }
  return out;
}

std::vector<Ring> Region::holes_of(int c) const {
  std::vector<Ring> out;
  for (const auto& sub : hole_subgraphs(c)) {
    std::vector<int> faces;
    for (int node : sub)
      for (int f : comps_[static_cast<std::size_t>(node)].faces) faces.push_back(f);
    out.push_back(trace_outer(faces).ring);
  }
  return out;
}

std::vector<int> Region::generalized_faces_of_component(int c) const {
  if (c == 0) fail(Err::RootNotAllowed, "generalized region of the unbounded component");
  std::vector<int> faces = comps_[static_cast<std::size_t>(c)].faces;
  for (const auto& sub : hole_subgraphs(c))
    for (int node : sub)
      for (int f : comps_[static_cast<std::size_t>(node)].faces) faces.push_back(f);
  std::sort(faces.begin(), faces.end());
  return faces;
}

Ring Region::generalized_of_component(int c) const {
  return trace_outer(generalized_faces_of_component(c)).ring;
}

std::vector<std::vector<int>> Region::generalized_region_subgraphs() const {
  return removal_subgraphs(graph_, 0);
}

std::vector<Ring> Region::generalized_region() const {
  std::vector<Ring> out;
  for (const auto& sub : generalized_region_subgraphs()) {
    std::vector<int> faces;
    for (int node : sub)
      for (int f : comps_[static_cast<std::size_t>(node)].faces) faces.push_back(f);
    out.push_back(trace_outer(faces).ring);
  }
  std::sort(out.begin(), out.end(), [](const Ring& a, const Ring& b) {
    return a.canonical_key() < b.canonical_key();
  });
  return out;
}

ShapeClass Region::classify() const {
  int bounded = static_cast<int>(comps_.size()) - 1;
  int max_level = 0, level1 = 0;
  for (const Component& c : comps_) {
    max_level = std::max(max_level, c.level);
    if (c.level == 1) ++level1;
  }
  if (max_level <= 1 && bounded == 1) return ShapeClass::Simple;
  if (max_level <= 1) return ShapeClass::Composite;
  if (level1 == 1 && max_level <= 2) return ShapeClass::SimpleWithHoles;
  return ShapeClass::General;
}

TracedRing Region::trace_outer(const std::vector<int>& faces) const {
  const Arrangement& arr = *arr_;
  std::vector<bool> in_set(arr.face_count(), false);
  for (int f : faces) in_set[static_cast<std::size_t>(f)] = true;

  auto is_boundary_he = [&](int h) {
    return in_set[static_cast<std::size_t>(arr.face_left(h))] &&
           !in_set[static_cast<std::size_t>(arr.face_left(h ^ 1))];
  };

  std::vector<int> boundary;
  for (std::size_t h = 0; h < arr.halfedges().size(); ++h)
    if (is_boundary_he(static_cast<int>(h))) boundary.push_back(static_cast<int>(h));
  if (boundary.empty()) fail(Err::Internal, "empty face set in trace");

  std::vector<bool> used(arr.halfedges().size(), false);
  std::vector<Point> outer_walk;
  std::vector<int> outer_edges;
  for (int start : boundary) {
    if (used[static_cast<std::size_t>(start)]) continue;
    std::vector<Point> walk;
    std::vector<int> edge_ids;
    int cur = start;
    do {
      used[static_cast<std::size_t>(cur)] = true;
      walk.push_back(arr.vertices()[static_cast<std::size_t>(arr.halfedges()[static_cast<std::size_t>(cur)].origin)]);
      edge_ids.push_back(cur / 2);
      int nxt = arr.halfedges()[static_cast<std::size_t>(cur)].next;
      while (!is_boundary_he(nxt)) {
        // interior edge of the union: pivot around the vertex
        nxt = arr.halfedges()[static_cast<std::size_t>(nxt ^ 1)].next;
      }
      cur = nxt;
    } while (cur != start);
    if (sgn(signed_area2(walk)) > 0) {
      if (!outer_walk.empty())
        fail(Err::Internal, "face-set union has two outer cycles");
      outer_walk = std::move(walk);
      outer_edges = std::move(edge_ids);
    } else {
      fail(Err::Internal, "face-set union is not simple (cavity in traced set)");
    }
  }
  if (outer_walk.empty()) fail(Err::Internal, "no outer cycle traced");
  return TracedRing{Ring::validate(std::move(outer_walk)), std::move(outer_edges)};
}

}  // namespace rtopo
