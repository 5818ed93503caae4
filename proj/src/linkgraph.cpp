/* Apache License, Version 2.0 */
#include <algorithm>
#include <map>
#include <sstream>

#include "rtopo/region.hpp"

namespace rtopo {

int LinkGraph::root() const {
  for (const Node& n : nodes)
    if (n.level == 0) return n.id;
  fail(Err::Internal, "link graph without root");
}

std::vector<std::pair<int, int>> LinkGraph::directed_edges() const {
  std::vector<std::pair<int, int>> out;
  for (const Node& n : nodes)
    for (int v : adj[static_cast<std::size_t>(n.id)])
      if (nodes[static_cast<std::size_t>(v)].level == n.level + 1)
        out.emplace_back(n.id, v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> LinkGraph::parents(int id) const {
  std::vector<int> out;
  for (int v : adj[static_cast<std::size_t>(id)])
    if (nodes[static_cast<std::size_t>(v)].level ==
        nodes[static_cast<std::size_t>(id)].level - 1)
      out.push_back(v);
  return out;
}

std::vector<int> LinkGraph::children(int id) const {
  std::vector<int> out;
  for (int v : adj[static_cast<std::size_t>(id)])
    if (nodes[static_cast<std::size_t>(v)].level ==
        nodes[static_cast<std::size_t>(id)].level + 1)
      out.push_back(v);
  return out;
}

std::string LinkGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph link_graph {\n";
  for (const Node& n : nodes) {
    const char* shape = n.level == 0 ? "doublecircle"
                        : n.kind == ComponentKind::Positive ? "ellipse"
                                                            : "box";
    os << "  n" << n.id << " [label=\"" << n.id << ":" << n.level
       << "\", shape=" << shape << "];\n";
  }
  for (auto [a, b] : directed_edges()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string LinkGraph::to_json() const {
  std::ostringstream os;
  os << "{\"nodes\":[";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) os << ",";
    os << "{\"id\":" << nodes[i].id << ",\"kind\":\""
       << component_kind_str(nodes[i].kind) << "\",\"level\":" << nodes[i].level
       << "}";
  }
  os << "],\"edges\":[";
  auto edges = directed_edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) os << ",";
    os << "[" << edges[i].first << "," << edges[i].second << "]";
  }
  os << "]}";
  return os.str();
}

namespace {

struct NodeSig {
  ComponentKind kind;
  int level;
  std::size_t degree;
  std::size_t parent_degree;
  friend auto operator<=>(const NodeSig&, const NodeSig&) = default;
};

NodeSig signature(const LinkGraph& g, int id) {
  return {g.nodes[static_cast<std::size_t>(id)].kind,
          g.nodes[static_cast<std::size_t>(id)].level,
          g.adj[static_cast<std::size_t>(id)].size(),
          g.parents(id).size()};
}

bool backtrack(const LinkGraph& a, const LinkGraph& b,
               const std::vector<int>& order, std::size_t depth,
               std::vector<int>& a2b, std::vector<int>& b_used) {
  if (depth == order.size()) return true;
  int u = order[depth];
  NodeSig su = signature(a, u);
  for (std::size_t v = 0; v < b.nodes.size(); ++v) {
    if (b_used[v]) continue;
    if (signature(b, static_cast<int>(v)) != su) continue;
    // adjacency with already-mapped nodes must match exactly
    bool ok = true;
    for (std::size_t w = 0; w < depth && ok; ++w) {
      int aw = order[w];
      bool e_a = std::binary_search(a.adj[static_cast<std::size_t>(u)].begin(),
                                    a.adj[static_cast<std::size_t>(u)].end(), aw);
      bool e_b = std::binary_search(b.adj[v].begin(), b.adj[v].end(), a2b[static_cast<std::size_t>(aw)]);
      ok = (e_a == e_b);
    }
    if (!ok) continue;
    a2b[static_cast<std::size_t>(u)] = static_cast<int>(v);
    b_used[v] = 1;
    if (backtrack(a, b, order, depth + 1, a2b, b_used)) return true;
    b_used[v] = 0;
    a2b[static_cast<std::size_t>(u)] = -1;
  }
  return false;
}

}  // namespace

bool link_graph_isomorphic(const LinkGraph& a, const LinkGraph& b) {
  if (a.nodes.size() != b.nodes.size()) return false;
  std::map<NodeSig, int> census;
  for (const auto& n : a.nodes) census[signature(a, n.id)]++;
  for (const auto& n : b.nodes) census[signature(b, n.id)]--;
  for (auto& [sig, count] : census)
    if (count != 0) return false;

  // Rarest signatures first keeps the search tiny.
  std::vector<int> order(a.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::map<NodeSig, int> freq;
  for (const auto& n : a.nodes) freq[signature(a, n.id)]++;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    int fx = freq[signature(a, x)], fy = freq[signature(a, y)];
    if (fx != fy) return fx < fy;
    return x < y;
  });

  std::vector<int> a2b(a.nodes.size(), -1);
  std::vector<int> b_used(b.nodes.size(), 0);
  return backtrack(a, b, order, 0, a2b, b_used);
}

}  // namespace rtopo
