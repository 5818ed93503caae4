/* Apache License, Version 2.0 */
#include "rtopo/generalize.hpp"

#include <algorithm>
#include <stdexcept>

namespace rtopo {

DropOutcome drop_component(const Region& region, int component_id) {
  const LinkGraph& g = region.link_graph();
  if (component_id < 0 ||
      component_id >= static_cast<int>(region.components().size()))
    throw std::invalid_argument("component id out of range");
  if (component_id == region.unbounded_component())
    fail(Err::RootNotAllowed, "cannot drop the unbounded component");
  if (!g.is_leaf(component_id))
    fail(Err::HasChildren, "component " + std::to_string(component_id) +
                               " has children in the link graph");
  const Component& c = region.component(component_id);
  if (c.kind == ComponentKind::Positive && c.level == 1)
    fail(Err::RootParentCollapse,
         "level-1 component would merge into the unbounded component");

  std::vector<int> parents = g.parents(component_id);
  if (parents.empty()) fail(Err::Internal, "leaf without parents");

  // Merge geometry: filling a hole flips its faces inside, removing an
  // island flips its faces outside.
  std::vector<bool> inside(region.arrangement().face_count());
  for (std::size_t f = 0; f < inside.size(); ++f)
    inside[f] = region.face_inside(static_cast<int>(f));
  bool fill = (c.kind == ComponentKind::Hole);
  for (int f : c.faces) inside[static_cast<std::size_t>(f)] = fill;

  std::vector<int> merged_faces = c.faces;
  for (int p : parents)
    for (int f : region.component(p).faces) merged_faces.push_back(f);
  std::sort(merged_faces.begin(), merged_faces.end());

  // Predicted graph: V1 = (V \ {c, p1..pk}) u {r}; edges kept inside V1,
  // edges touching any parent redirected to r on the matching side. The
  // redirect runs both ways so surviving children of the parents keep
  // their edge into the merged node.
  DropOutcome out{Region::from_flags(region.arrangement_ptr(), std::move(inside)),
                  LinkGraph{},
                  std::move(merged_faces)};

  std::vector<int> removed{component_id};
  for (int p : parents) removed.push_back(p);
  std::sort(removed.begin(), removed.end());
  auto is_removed = [&](int id) {
    return std::binary_search(removed.begin(), removed.end(), id);
  };
  std::vector<int> old2new(g.nodes.size(), -1);
  LinkGraph& pg = out.predicted;
  for (const auto& n : g.nodes) {
    if (is_removed(n.id)) continue;
    old2new[static_cast<std::size_t>(n.id)] = static_cast<int>(pg.nodes.size());
    pg.nodes.push_back({static_cast<int>(pg.nodes.size()), n.kind, n.level});
  }
  int r_id = static_cast<int>(pg.nodes.size());
  ComponentKind r_kind = (c.kind == ComponentKind::Hole) ? ComponentKind::Positive
                                                         : ComponentKind::Hole;
  pg.nodes.push_back({r_id, r_kind, c.level - 1});
  pg.adj.assign(pg.nodes.size(), {});
  auto connect = [&](int x, int y) {
    auto& ax = pg.adj[static_cast<std::size_t>(x)];
    if (std::find(ax.begin(), ax.end(), y) == ax.end()) {
      ax.push_back(y);
      pg.adj[static_cast<std::size_t>(y)].push_back(x);
    }
  };
  for (const auto& n : g.nodes) {
    for (int v : g.adj[static_cast<std::size_t>(n.id)]) {
      if (v < n.id) continue;
      bool rn = is_removed(n.id), rv = is_removed(v);
      if (!rn && !rv) {
        connect(old2new[static_cast<std::size_t>(n.id)], old2new[static_cast<std::size_t>(v)]);
      } else if (!rn && rv && v != component_id) {
        connect(old2new[static_cast<std::size_t>(n.id)], r_id);
      } else if (rn && !rv && n.id != component_id) {
        connect(r_id, old2new[static_cast<std::size_t>(v)]);
      }
    }
  }
  for (auto& nbrs : pg.adj) std::sort(nbrs.begin(), nbrs.end());
  return out;
}

namespace {

// Deepest level first, then ascending component id.
int pick_leaf(const Region& region) {
  int best = -1;
  for (const Component& c : region.components()) {
    if (c.level < 2) continue;
    if (best < 0 || c.level > region.component(best).level) best = c.id;
  }
  return best;
}

}  // namespace

Region generalize_steps(const Region& region, long max_steps) {
  Region cur = region;
  long steps = 0;
  while (max_steps < 0 || steps < max_steps) {
    int leaf = pick_leaf(cur);
    if (leaf < 0) break;
    cur = drop_component(cur, leaf).region;
    ++steps;
  }
  return cur;
}

Region generalize_fully(const Region& region) {
  return generalize_steps(region, -1);
}

Region drop_small(const Region& region, const Rational& min_area) {
  if (sgn(min_area) <= 0) throw std::invalid_argument("min_area must be positive");

  std::vector<bool> inside(region.arrangement().face_count());
  for (std::size_t f = 0; f < inside.size(); ++f)
    inside[f] = region.face_inside(static_cast<int>(f));

  bool any_removed = false, any_left = false;
  for (const Component& c : region.components()) {
    if (c.level != 1) continue;
    std::vector<int> gfaces = region.generalized_faces_of_component(c.id);
    Rational area = 0;
    for (int f : gfaces)
      area += region.arrangement().faces()[static_cast<std::size_t>(f)].area;
    if (cmp(area, min_area) < 0) {
      any_removed = true;
      for (int f : gfaces) inside[static_cast<std::size_t>(f)] = false;
    } else {
      any_left = true;
    }
  }
  if (!any_left) fail(Err::EmptyResult, "all components below the area threshold");
  if (!any_removed) return region;
  return Region::from_flags(region.arrangement_ptr(), std::move(inside));
}

}  // namespace rtopo
