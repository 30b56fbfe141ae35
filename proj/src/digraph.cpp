#include "phylo/digraph.hpp"

#include <algorithm>

namespace phylo {

Digraph::Digraph(int n) : n_(n), out_(n, 0), in_(n, 0) {
  if (n < 0 || n > kMaxVertices)
    throw SizeLimitExceeded("digraph order must be in 0..64, got " +
                            std::to_string(n));
}

Digraph Digraph::from_arcs(int n,
                           const std::vector<std::pair<int, int>>& arcs) {
  Digraph d(n);
  for (auto [u, v] : arcs) d.add_arc(u, v);
  return d;
}

void Digraph::add_arc(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw OutOfRange("arc endpoint out of range");
  if (u == v) throw OutOfRange("self-loops are not allowed");
  if (has_arc(u, v)) throw OutOfRange("duplicate arc");
  out_[u] |= vbit(v);
  in_[v] |= vbit(u);
}

int Digraph::arc_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += outdegree(v);
  return total;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for_each_vertex(out_[u], [&](int v) { out.emplace_back(u, v); });
  return out;
}

DegreeBounds::DegreeBounds(int i_, int j_) : i(i_), j(j_) {
  if (i < 1 || j < 1) throw InvalidParams("degree bounds must be >= 1");
}

BoundsCheck check_bounds(const Digraph& d, DegreeBounds b) {
  BoundsCheck res;
  for (int v = 0; v < d.order(); ++v) {
    if (d.indegree(v) > b.i) res.violations.push_back({v, true, d.indegree(v)});
    if (d.outdegree(v) > b.j)
      res.violations.push_back({v, false, d.outdegree(v)});
  }
  return res;
}

Graph underlying_graph(const Digraph& d) {
  Graph g(d.order());
  for (auto [u, v] : d.arcs())
    if (!g.has_edge(u, v)) g.add_edge(u, v);
  return g;
}

std::optional<std::vector<int>> find_directed_cycle(const Digraph& d) {
  int n = d.order();
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<int> state(n, 0), parent(n, -1);
  for (int root = 0; root < n; ++root) {
    if (state[root]) continue;
    std::vector<int> stack = {root};
    parent[root] = -1;
    while (!stack.empty()) {
      int u = stack.back();
      if (state[u] == 0) {
        state[u] = 1;
        bool found_cycle = false;
        int cycle_end = -1;
        for_each_vertex(d.out(u), [&](int w) {
          if (found_cycle) return;
          if (state[w] == 1) {
            found_cycle = true;
            cycle_end = w;
          } else if (state[w] == 0 && parent[w] == -1) {
            parent[w] = u;
            stack.push_back(w);
          }
        });
        if (found_cycle) {
          std::vector<int> cycle = {cycle_end};
          for (int x = u; x != cycle_end; x = parent[x]) cycle.push_back(x);
          cycle.push_back(cycle_end);
          std::reverse(cycle.begin() + 1, cycle.end() - 1);
          return cycle;
        }
      } else {
        state[u] = 2;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

bool is_acyclic(const Digraph& d) { return !find_directed_cycle(d).has_value(); }

std::vector<int> topological_order(const Digraph& d) {
  int n = d.order();
  std::vector<int> indeg(n), order;
  order.reserve(n);
  for (int v = 0; v < n; ++v) indeg[v] = d.indegree(v);
  VertexSet remaining = d.vertices();
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for_each_vertex(remaining, [&](int v) {
      if (pick == -1 && indeg[v] == 0) pick = v;
    });
    if (pick == -1) break;
    order.push_back(pick);
    remaining &= ~vbit(pick);
    for_each_vertex(d.out(pick), [&](int w) { --indeg[w]; });
  }
  if (static_cast<int>(order.size()) != n) {
    auto cycle = find_directed_cycle(d);
    throw CyclicInput(*cycle);
  }
  return order;
}

InducedDigraph induced(const Digraph& d, VertexSet s) {
  if (s & ~d.vertices()) throw OutOfRange("induced set has labels >= n");
  std::vector<int> labels = to_vector(s);
  Digraph sub(static_cast<int>(labels.size()));
  for (size_t a = 0; a < labels.size(); ++a)
    for (size_t b = 0; b < labels.size(); ++b)
      if (a != b && d.has_arc(labels[a], labels[b]))
        sub.add_arc(static_cast<int>(a), static_cast<int>(b));
  return {std::move(sub), std::move(labels)};
}

std::uint64_t digest(const Digraph& d) {
  constexpr std::uint64_t kOffset = 14695981039346656037ull;
  constexpr std::uint64_t kPrime = 1099511628211ull;
  auto mix = [](std::uint64_t h, std::uint64_t byte) {
    return (h ^ byte) * kPrime;
  };
  std::uint64_t h = mix(kOffset, static_cast<std::uint64_t>(d.order()));
  for (auto [u, v] : d.arcs()) {
    h = mix(h, static_cast<std::uint64_t>(u));
    h = mix(h, static_cast<std::uint64_t>(v));
  }
  return h;
}

std::string degree_bounds_str(DegreeBounds b) {
  return "(" + std::to_string(b.i) + "," + std::to_string(b.j) + ")";
}

}  // namespace phylo
