#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phylo/bits.hpp"
#include "phylo/errors.hpp"
#include "phylo/graph.hpp"

namespace phylo {

/// Simple digraph on dense labels 0..n-1; out- and in-neighbor bitsets are
/// kept consistent. No self-loops, at most one arc per ordered pair.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

  int order() const { return n_; }
  void add_arc(int u, int v);
  bool has_arc(int u, int v) const { return contains(out_[u], v); }
  VertexSet out(int v) const { return out_[v]; }
  VertexSet in(int v) const { return in_[v]; }
  int outdegree(int v) const { return setsize(out_[v]); }
  int indegree(int v) const { return setsize(in_[v]); }
  int arc_count() const;
  /// Arcs as ordered pairs, sorted lexicographically.
  std::vector<std::pair<int, int>> arcs() const;
  VertexSet vertices() const { return all_vertices(n_); }

  bool operator==(const Digraph&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> out_, in_;
};

/// Max indegree / max outdegree bound pair; the paper's (i,j).
struct DegreeBounds {
  int i = 1;
  int j = 1;
  DegreeBounds() = default;
  DegreeBounds(int i_, int j_);
};

struct BoundViolation {
  int vertex;
  bool indegree_bound;  // false: outdegree bound
  int degree;
};

struct BoundsCheck {
  std::vector<BoundViolation> violations;
  bool pass() const { return violations.empty(); }
};

BoundsCheck check_bounds(const Digraph& d, DegreeBounds b);

/// Underlying graph: arc directions erased.
Graph underlying_graph(const Digraph& d);

/// Topological order (every arc forward), smallest-label-first among ready
/// vertices. Throws CyclicInput with a directed-cycle witness.
std::vector<int> topological_order(const Digraph& d);

bool is_acyclic(const Digraph& d);

/// Directed cycle v0 -> ... -> v0 (last = first) if one exists.
std::optional<std::vector<int>> find_directed_cycle(const Digraph& d);

struct InducedDigraph {
  Digraph digraph;
  std::vector<int> labels;  // labels[new] = original label
};

InducedDigraph induced(const Digraph& d, VertexSet s);

/// Stable 64-bit FNV-1a digest of (n, sorted arc list); identifies
/// counterexamples across runs.
std::uint64_t digest(const Digraph& d);

std::string degree_bounds_str(DegreeBounds b);

}  // namespace phylo
