#pragma once

#include <utility>
#include <vector>

#include "phylo/bits.hpp"
#include "phylo/errors.hpp"

namespace phylo {

/// Simple undirected graph on dense labels 0..n-1 with bitset adjacency.
/// Values are cheap to copy and never mutated by the algorithms; treat a
/// fully built Graph as immutable.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return contains(adj_[u], v); }
  VertexSet adj(int v) const { return adj_[v]; }
  int degree(int v) const { return setsize(adj_[v]); }
  int max_degree() const;
  int edge_count() const;
  /// Edges as (u,v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;
  VertexSet vertices() const { return all_vertices(n_); }

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

struct InducedGraph {
  Graph graph;
  std::vector<int> labels;  // labels[new] = original label
};

/// Subgraph induced by S, relabeled 0..|S|-1 by increasing original label.
InducedGraph induced(const Graph& g, VertexSet s);

/// Connected component containing v (as a vertex set of g).
VertexSet component_of(const Graph& g, int v);

bool is_connected_subset(const Graph& g, VertexSet s);

/// True iff g has no cycle.
bool is_forest(const Graph& g);

}  // namespace phylo
