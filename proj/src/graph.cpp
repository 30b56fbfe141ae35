#include "phylo/graph.hpp"

#include <algorithm>

namespace phylo {

Graph::Graph(int n) : n_(n), adj_(n, 0) {
  if (n < 0 || n > kMaxVertices)
    throw SizeLimitExceeded("graph order must be in 0..64, got " +
                            std::to_string(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw OutOfRange("edge endpoint out of range");
  if (u == v) throw OutOfRange("self-loops are not allowed");
  adj_[u] |= vbit(v);
  adj_[v] |= vbit(u);
}

int Graph::max_degree() const {
  int md = 0;
  for (int v = 0; v < n_; ++v) md = std::max(md, degree(v));
  return md;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for_each_vertex(adj_[u] & ~(all_vertices(u + 1)),
                    [&](int v) { out.emplace_back(u, v); });
  return out;
}

InducedGraph induced(const Graph& g, VertexSet s) {
  if (s & ~g.vertices()) throw OutOfRange("induced set has labels >= n");
  std::vector<int> labels = to_vector(s);
  Graph sub(static_cast<int>(labels.size()));
  for (size_t a = 0; a < labels.size(); ++a)
    for (size_t b = a + 1; b < labels.size(); ++b)
      if (g.has_edge(labels[a], labels[b]))
        sub.add_edge(static_cast<int>(a), static_cast<int>(b));
  return {std::move(sub), std::move(labels)};
}

VertexSet component_of(const Graph& g, int v) {
  VertexSet comp = vbit(v), frontier = vbit(v);
  while (frontier) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int u) { next |= g.adj(u); });
    frontier = next & ~comp;
    comp |= frontier;
  }
  return comp;
}

bool is_connected_subset(const Graph& g, VertexSet s) {
  if (!s) return true;
  VertexSet comp = vbit(lowest(s)), frontier = comp;
  while (frontier) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int u) { next |= g.adj(u) & s; });
    frontier = next & ~comp;
    comp |= frontier;
  }
  return comp == s;
}

bool is_forest(const Graph& g) {
  // A graph is a forest iff every component has |E| = |V| - 1.
  VertexSet seen = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (contains(seen, v)) continue;
    VertexSet comp = component_of(g, v);
    seen |= comp;
    int edges = 0;
    for_each_vertex(comp, [&](int u) { edges += setsize(g.adj(u) & comp); });
    edges /= 2;
    if (edges != setsize(comp) - 1) return false;
  }
  return true;
}

}  // namespace phylo
