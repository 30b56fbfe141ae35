#include "phylo/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace phylo {

namespace {

// Iterated neighbor-color refinement (1-WL). Stable vertex colors; two
// isomorphic graphs assign the same multiset of colors.
std::vector<std::uint64_t> refine_colors(const Graph& g) {
  int n = g.order();
  std::vector<std::uint64_t> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for_each_vertex(g.adj(v),
                      [&](int u) { sig[v].second.push_back(color[u]); });
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    // Ids are signature ranks, so they are label-independent.
    std::map<std::pair<std::uint64_t, std::vector<std::uint64_t>>,
             std::uint64_t>
        next_id;
    for (int v = 0; v < n; ++v) next_id[sig[v]] = 0;
    std::uint64_t rank = 0;
    for (auto& [key, id] : next_id) id = rank++;
    std::vector<std::uint64_t> next(n);
    for (int v = 0; v < n; ++v) next[v] = next_id[sig[v]];
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

bool extend(const Graph& g1, const Graph& g2,
            const std::vector<std::uint64_t>& c1,
            const std::vector<std::uint64_t>& c2, std::vector<int>& mapping,
            VertexSet& used, int v) {
  int n = g1.order();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (contains(used, w) || c1[v] != c2[w]) continue;
    bool ok = true;
    for (int p = 0; p < v && ok; ++p)
      if (g1.has_edge(p, v) != g2.has_edge(mapping[p], w)) ok = false;
    if (!ok) continue;
    mapping[v] = w;
    used |= vbit(w);
    if (extend(g1, g2, c1, c2, mapping, used, v + 1)) return true;
    used &= ~vbit(w);
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> graphs_isomorphic(const Graph& g1,
                                                  const Graph& g2, int cap) {
  if (g1.order() > cap || g2.order() > cap)
    throw SizeLimitExceeded("isomorphism test capped at n <= " +
                            std::to_string(cap));
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count())
    return std::nullopt;
  auto c1 = refine_colors(g1), c2 = refine_colors(g2);
  auto s1 = c1, s2 = c2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return std::nullopt;
  std::vector<int> mapping(g1.order(), -1);
  VertexSet used = 0;
  if (extend(g1, g2, c1, c2, mapping, used, 0)) return mapping;
  return std::nullopt;
}

}  // namespace phylo
