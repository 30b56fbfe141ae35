#pragma once

#include <optional>
#include <vector>

#include "phylo/graph.hpp"

namespace phylo {

inline constexpr int kIsoDefaultCap = 12;

/// Edge-preserving bijection g1 -> g2 if one exists (mapping[v1] = v2).
/// Degree refinement narrows candidate classes, then backtracking.
/// Intended for small graphs; throws SizeLimitExceeded above the cap.
std::optional<std::vector<int>> graphs_isomorphic(const Graph& g1,
                                                  const Graph& g2,
                                                  int cap = kIsoDefaultCap);

}  // namespace phylo
