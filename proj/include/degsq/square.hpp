#pragma once

#include <optional>
#include <utility>

#include "degsq/graph.hpp"

namespace degsq {

// Same vertices; uv is an edge iff uv is an edge of g or u,v share a neighbor.
Graph square(const Graph& g);

// True iff every pair of s is adjacent in square(g).
bool is_clique_in_square(const Graph& g, const VertexSet& s);

// First (lexicographically) pair of s at distance > 2, if any.
std::optional<std::pair<int, int>> find_non_square_pair(const Graph& g, const VertexSet& s);

}  // namespace degsq
