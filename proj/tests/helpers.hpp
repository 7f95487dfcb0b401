#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <vector>

#include "degsq/construct.hpp"
#include "degsq/graph.hpp"

namespace testutil {

inline degsq::Graph path_graph(int n) {
  std::vector<int> vs;
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) vs.push_back(i);
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return degsq::Graph(vs, es);
}

inline degsq::Graph cycle_graph(int n) {
  std::vector<int> vs;
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) vs.push_back(i);
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return degsq::Graph(vs, es);
}

inline degsq::Graph complete_graph(int n) {
  std::vector<int> vs;
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) vs.push_back(i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return degsq::Graph(vs, es);
}

inline degsq::Graph complete_bipartite(int a, int b) {
  std::vector<int> vs;
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < a + b; ++i) vs.push_back(i);
  for (int i = 0; i < a; ++i)
    for (int j = a; j < a + b; ++j) es.emplace_back(i, j);
  return degsq::Graph(vs, es);
}

inline degsq::Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

// The 7-vertex token-trace fixture: vertices 1..7 with the eleven edges
// 12,17,24,25,34,36,45,46,56,57,67.
inline degsq::Graph token_trace_graph() {
  std::vector<std::pair<int, int>> es = {{1, 2}, {1, 7}, {2, 4}, {2, 5}, {3, 4}, {3, 6},
                                         {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}};
  return degsq::Graph({1, 2, 3, 4, 5, 6, 7}, es);
}

inline std::uint64_t mix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Deterministic G(n, p); p given in per-mille to keep seeds portable.
inline degsq::Graph gnp(int n, int p_mille, std::uint64_t seed) {
  std::vector<int> vs;
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) vs.push_back(i);
  std::uint64_t state = seed;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (mix64(state) % 1000 < static_cast<std::uint64_t>(p_mille)) es.emplace_back(i, j);
  return degsq::Graph(vs, es);
}

inline int bfs_distance(const degsq::Graph& g, int from, int to) {
  if (from == to) return 0;
  std::map<int, int> dist;
  std::deque<int> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist.count(w)) continue;
      dist[w] = dist[v] + 1;
      if (w == to) return dist[w];
      queue.push_back(w);
    }
  }
  return -1;
}

// Token pass re-implemented with explicit labeled token objects, one list per
// vertex; counts are what the ledger implementation must reproduce.
struct TokenOracleResult {
  std::map<int, std::vector<int>> primary;    // v -> origins of primary tokens held
  std::map<int, std::vector<int>> secondary;  // v -> origins of secondary tokens held
};

inline TokenOracleResult token_pass_oracle(const degsq::Graph& g, const degsq::VertexSet& s,
                                           const degsq::VertexOrder& order,
                                           std::int64_t threshold = 1) {
  TokenOracleResult out;
  for (int v : order.sequence()) {
    out.primary[v];
    out.secondary[v];
  }
  for (int v : order.sequence()) {
    std::size_t pv = *order.position(v);
    const auto held = out.primary[v];  // frozen before distribution
    for (int w : g.neighbors(v)) {
      if (*order.position(w) <= pv) continue;
      if (s.count(v)) out.primary[w].push_back(v);
      if (static_cast<std::int64_t>(held.size()) >= threshold && !held.empty())
        for (int origin : held) out.secondary[w].push_back(origin);
    }
  }
  return out;
}

// Six-hub analog of the tight family: K6 hubs, complete-bipartite blocks of
// `block_size` per hub pair, and bridge vertices between disjoint blocks.
// Drives extraction runs whose after-set has exactly six vertices.
struct SixHubInstance {
  degsq::Graph graph;
  degsq::VertexSet witness;
  std::vector<int> hubs;
};

inline SixHubInstance build_six_hub(int block_size) {
  SixHubInstance out;
  for (int i = 0; i < 6; ++i) out.hubs.push_back(i);
  std::vector<std::pair<int, int>> hub_pairs;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) hub_pairs.emplace_back(i, j);

  std::vector<std::pair<int, int>> edges;
  std::map<std::pair<int, int>, std::vector<int>> block;
  int next = 6;
  for (auto [i, j] : hub_pairs) {
    for (int t = 0; t < block_size; ++t) {
      int x = next++;
      block[{i, j}].push_back(x);
      edges.emplace_back(i, x);
      edges.emplace_back(j, x);
      out.witness.insert(x);
    }
  }
  for (std::size_t a = 0; a < hub_pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < hub_pairs.size(); ++b) {
      auto [i1, j1] = hub_pairs[a];
      auto [i2, j2] = hub_pairs[b];
      if (i1 == i2 || i1 == j2 || j1 == i2 || j1 == j2) continue;
      for (int x : block[hub_pairs[a]])
        for (int y : block[hub_pairs[b]]) {
          int z = next++;
          edges.emplace_back(x, z);
          edges.emplace_back(y, z);
        }
    }
  }
  std::vector<int> vertices;
  for (int v = 0; v < next; ++v) vertices.push_back(v);
  out.graph = degsq::Graph(vertices, edges);
  return out;
}

}  // namespace testutil
