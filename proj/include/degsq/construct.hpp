#pragma once

#include <array>
#include <cstdint>

#include "degsq/graph.hpp"

namespace degsq {

// A maximum-degree-D witness family: five hubs joined by complete bipartite
// gadgets, plus degree-2 bridge vertices, whose square contains a clique of
// size floor(5D/2).
struct TightInstance {
  Graph graph;
  std::array<int, 5> hubs{};
  VertexSet clique_witness;  // all gadget (V_e) vertices
  int d = 0;
  int k = 0;
  int r = 0;
};

// d >= 8 (so k >= 2). Labels: hubs 0..4, then gadget blocks in lexicographic
// hub-pair order, then bridge vertices in lexicographic pair order.
TightInstance build_tight(int d);

// Vertices 0..n-1 added one at a time, each joined to min(attach, existing)
// distinct uniformly random earlier vertices; reverse insertion order is an
// attach-degeneracy order by construction. Deterministic given seed.
Graph random_2degenerate(int n, int attach, std::uint64_t seed);

}  // namespace degsq
