#include "degsq/square.hpp"

#include <algorithm>
#include <vector>

namespace degsq {

namespace {

std::vector<std::vector<std::uint64_t>> neighbor_bitsets(const Graph& g) {
  std::size_t n = g.vertex_count();
  std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(words, 0));
  for (const auto& [u, v] : g.edges()) {
    std::size_t ui = g.index_of(u), vi = g.index_of(v);
    rows[ui][vi >> 6] |= 1ull << (vi & 63);
    rows[vi][ui >> 6] |= 1ull << (ui & 63);
  }
  return rows;
}

}  // namespace

Graph square(const Graph& g) {
  const auto& vs = g.vertices();
  std::size_t n = vs.size();
  std::size_t words = (n + 63) / 64;
  auto nbr = neighbor_bitsets(g);

  std::vector<std::pair<int, int>> edges;
  std::vector<std::uint64_t> reach(words);
  for (std::size_t i = 0; i < n; ++i) {
    // Union of neighborhoods of neighbors, plus direct neighbors.
    reach = nbr[i];
    for (int w : g.neighbors(vs[i])) {
      const auto& row = nbr[g.index_of(w)];
      for (std::size_t k = 0; k < words; ++k) reach[k] |= row[k];
    }
    for (std::size_t k = 0; k < words; ++k) {
      std::uint64_t bits = reach[k];
      while (bits) {
        std::size_t j = (k << 6) + static_cast<std::size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        if (j > i) edges.emplace_back(vs[i], vs[j]);
      }
    }
  }
  return Graph(vs, edges);
}

bool is_clique_in_square(const Graph& g, const VertexSet& s) {
  return !find_non_square_pair(g, s).has_value();
}

std::optional<std::pair<int, int>> find_non_square_pair(const Graph& g, const VertexSet& s) {
  for (int v : s)
    if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v) + " in clique set");
  if (s.size() < 2) return std::nullopt;
  auto nbr = neighbor_bitsets(g);
  std::size_t words = (g.vertex_count() + 63) / 64;
  std::vector<int> members(s.begin(), s.end());
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      int u = members[a], v = members[b];
      if (g.has_edge(u, v)) continue;
      const auto& ru = nbr[g.index_of(u)];
      const auto& rv = nbr[g.index_of(v)];
      bool common = false;
      for (std::size_t k = 0; k < words && !common; ++k) common = (ru[k] & rv[k]) != 0;
      if (!common) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

}  // namespace degsq
