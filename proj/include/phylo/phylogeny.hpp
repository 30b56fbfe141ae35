#pragma once

#include <map>
#include <vector>

#include "phylo/digraph.hpp"
#include "phylo/graph.hpp"

namespace phylo {

/// Competition graph C(D): u,v adjacent iff they share an out-neighbor.
/// Throws CyclicInput; the paper's definitions assume acyclic digraphs.
Graph competition_graph(const Digraph& d);

/// Phylogeny (moral) graph P(D): E(U(D)) union E(C(D)).
Graph phylogeny_graph(const Digraph& d);

/// Cared edges: edges of C(D) not in U(D), each mapped to every caring
/// vertex (all common out-neighbors witnessing it). Keys are (u,v), u < v.
using CaredEdgeMap = std::map<std::pair<int, int>, std::vector<int>>;

CaredEdgeMap cared_edges(const Digraph& d);

void require_acyclic(const Digraph& d);

}  // namespace phylo
