/* Apache License, Version 2.0 */
#ifndef RTOPO_REGION_HPP
#define RTOPO_REGION_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rtopo/arrangement.hpp"

namespace rtopo {

// Regularized boolean expression over named rings.
struct RegionExpr {
  enum class Op { Ref, Union, Intersection, Difference, Complement };
  Op op = Op::Ref;
  std::string ref;
  std::vector<RegionExpr> args;

  static RegionExpr make_ref(std::string name);
  static RegionExpr make_union(std::vector<RegionExpr> args);
  static RegionExpr make_intersection(std::vector<RegionExpr> args);
  static RegionExpr make_difference(RegionExpr a, RegionExpr b);
  static RegionExpr make_complement(RegionExpr a);

  void collect_refs(std::vector<std::string>& out) const;
  bool evaluate(const std::map<std::string, bool>& leaf_values) const;
};

using RingTable = std::map<std::string, Ring>;

enum class EdgeClass { Boundary, InteriorEdge, ExteriorEdge };
enum class VertexClass { Boundary, InteriorVertex, ExteriorVertex };
enum class ComponentKind { Positive, Hole, Unbounded };
enum class ShapeClass { Simple, SimpleWithHoles, Composite, General };

const char* component_kind_str(ComponentKind k);
const char* shape_class_str(ShapeClass s);

struct Component {
  int id = -1;
  ComponentKind kind = ComponentKind::Positive;
  int level = -1;
  std::vector<int> faces;  // faces of one connectivity class, sorted
  Rational area;           // 0 for the unbounded component
};

// Layered graph over components; the root is the unbounded component at
// level 0, directed edges run to the next level.
struct LinkGraph {
  struct Node {
    int id = -1;
    ComponentKind kind = ComponentKind::Positive;
    int level = -1;
  };
  std::vector<Node> nodes;            // nodes[i].id == i
  std::vector<std::vector<int>> adj;  // undirected "linked", sorted

  int root() const;
  std::vector<std::pair<int, int>> directed_edges() const;
  std::vector<int> parents(int id) const;
  std::vector<int> children(int id) const;
  bool is_leaf(int id) const { return children(id).empty(); }

  std::string to_dot() const;
  std::string to_json() const;
};

// Kind- and level-preserving directed isomorphism, by backtracking over
// (kind, level, degree) signatures.
bool link_graph_isomorphic(const LinkGraph& a, const LinkGraph& b);

enum class AtomRole { GeneralizedOf, HoleOf, ComponentOfGeneralizedRegion };

struct AtomRoleEntry {
  AtomRole role;
  int component = -1;  // unused for ComponentOfGeneralizedRegion
  friend bool operator==(const AtomRoleEntry&, const AtomRoleEntry&) = default;
};

struct Atom {
  Ring ring;
  std::vector<AtomRoleEntry> roles;
};

// Structure view consumed by the local 9-intersection pipeline: per bounded
// component its generalized ring and hole rings, plus the rings composing
// the generalized region, all as indices into a shared atom-ring list.
struct AtomsSummary {
  struct BoundedComp {
    int component = -1;
    ComponentKind kind = ComponentKind::Positive;
    int generalized_atom = -1;
    std::vector<int> hole_atoms;
  };
  std::vector<BoundedComp> comps;
  std::vector<int> ghat_atoms;
  std::vector<Ring> rings;
  int unbounded_component = 0;
  int component_count = 0;
};

struct TracedRing {
  Ring ring;
  std::vector<int> edge_ids;  // arrangement edges of the walk
};

// A bounded regular closed polygonal set, realized as a labeled arrangement
// and fully analyzed on construction (components, levels, link graph,
// atoms). Immutable afterwards; safe to share across threads.
class Region {
 public:
  // Throws Err::UnknownRingRef, Err::EmptyRegion, Err::UnboundedRegion.
  static Region evaluate(const RingTable& rings, const RegionExpr& expr);

  // Re-labels an existing arrangement; used by the generalization steps.
  static Region from_flags(std::shared_ptr<const Arrangement> arr,
                           std::vector<bool> inside);

  const Arrangement& arrangement() const { return *arr_; }
  std::shared_ptr<const Arrangement> arrangement_ptr() const { return arr_; }

  bool face_inside(int f) const { return inside_[static_cast<std::size_t>(f)]; }
  EdgeClass edge_class(int e) const { return eclass_[static_cast<std::size_t>(e)]; }
  VertexClass vertex_class(int v) const { return vclass_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& boundary_edges() const { return boundary_edges_; }
  std::vector<Segment> boundary_segments() const;
  Rational area() const;

  const std::vector<Component>& components() const { return comps_; }
  const Component& component(int id) const { return comps_[static_cast<std::size_t>(id)]; }
  int component_of_face(int f) const { return comp_of_face_[static_cast<std::size_t>(f)]; }
  // Positive component ids / hole component ids, ascending.
  std::vector<int> positive_components() const;
  std::vector<int> hole_components() const;
  int unbounded_component() const { return 0; }

  // Component whose face contains p; nullopt when p lies on an edge/vertex.
  std::optional<int> component_at(const Point& p) const;

  bool linked(int c1, int c2) const;
  const LinkGraph& link_graph() const { return graph_; }

  // Node sets of the connected subgraphs not containing the root after
  // removing component c (Def.-driven hole computation).
  std::vector<std::vector<int>> hole_subgraphs(int c) const;
  std::vector<Ring> holes_of(int c) const;
  Ring generalized_of_component(int c) const;
  std::vector<int> generalized_faces_of_component(int c) const;
  std::vector<Ring> generalized_region() const;
  std::vector<std::vector<int>> generalized_region_subgraphs() const;

  const std::vector<Atom>& atoms() const { return atoms_; }
  const AtomsSummary& atoms_summary() const { return summary_; }

  ShapeClass classify() const;

  // Outer boundary walk of the closure of a face-set union. The union must
  // bound a simple region; collinear chain vertices are normalized away.
  TracedRing trace_outer(const std::vector<int>& faces) const;

 private:
  Region() = default;
  void analyze();

  std::shared_ptr<const Arrangement> arr_;
  std::vector<bool> inside_;
  std::vector<EdgeClass> eclass_;
  std::vector<VertexClass> vclass_;
  std::vector<int> boundary_edges_;
  std::vector<Component> comps_;
  std::vector<int> comp_of_face_;
  LinkGraph graph_;
  std::vector<Atom> atoms_;
  AtomsSummary summary_;
};

}  // namespace rtopo

#endif
