#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace phylo {

// Vertex sets are single-word bitsets; every desk-scale experiment in this
// project fits in n <= 64.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1; }
constexpr int setsize(VertexSet s) { return std::popcount(s); }

/// Mask with bits 0..n-1 set.
constexpr VertexSet all_vertices(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int lowest(VertexSet s) { return std::countr_zero(s); }

template <typename Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s) {
    int v = std::countr_zero(s);
    fn(v);
    s &= s - 1;
  }
}

inline std::vector<int> to_vector(VertexSet s) {
  std::vector<int> out;
  out.reserve(setsize(s));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

inline VertexSet from_vector(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= vbit(v);
  return s;
}

}  // namespace phylo
