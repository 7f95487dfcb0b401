#include "degsq/construct.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace degsq {

namespace {

// splitmix64: tiny deterministic generator, identical across platforms.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t mask = ~0ull;
    if (bound > 1) {
      mask = bound - 1;
      mask |= mask >> 1;
      mask |= mask >> 2;
      mask |= mask >> 4;
      mask |= mask >> 8;
      mask |= mask >> 16;
      mask |= mask >> 32;
    } else {
      return 0;
    }
    std::uint64_t x;
    do {
      x = next() & mask;
    } while (x >= bound);
    return x;
  }
};

}  // namespace

TightInstance build_tight(int d) {
  if (d < 8) throw std::invalid_argument("build_tight requires d >= 8");
  TightInstance out;
  out.d = d;
  out.k = d / 4;
  out.r = d % 4;

  for (int i = 0; i < 5; ++i) out.hubs[i] = i;

  // Hub pairs of K5 in lexicographic order, 1-based as (i, j).
  std::vector<std::pair<int, int>> hub_pairs;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) hub_pairs.emplace_back(i, j);

  auto on_c5 = [](int i, int j) {
    return (i == 1 && j == 2) || (i == 2 && j == 3) || (i == 3 && j == 4) || (i == 4 && j == 5) ||
           (i == 1 && j == 5);
  };
  auto block_size = [&](int i, int j) {
    bool heavy = (i == 1 && j == 2) || (i == 3 && j == 4);
    switch (out.r) {
      case 0:
        return out.k;
      case 1:
        return heavy ? out.k + 1 : out.k;
      case 2:
        return on_c5(i, j) ? out.k + 1 : out.k;
      default:  // r == 3
        if (heavy) return out.k + 2;
        return on_c5(i, j) ? out.k + 1 : out.k;
    }
  };

  std::vector<std::pair<int, int>> edges;
  std::map<std::pair<int, int>, std::vector<int>> block;  // hub pair -> gadget labels
  int next_label = 5;
  for (const auto& [i, j] : hub_pairs) {
    int size = block_size(i, j);
    auto& vs = block[{i, j}];
    for (int t = 0; t < size; ++t) {
      int x = next_label++;
      vs.push_back(x);
      edges.emplace_back(i - 1, x);
      edges.emplace_back(j - 1, x);
      out.clique_witness.insert(x);
    }
  }

  // One bridge vertex per pair of gadget vertices whose hub pairs are
  // disjoint (pairs sharing a hub already have a common neighbor).
  std::vector<std::pair<int, int>> bridge_pairs;
  for (std::size_t a = 0; a < hub_pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < hub_pairs.size(); ++b) {
      auto [i1, j1] = hub_pairs[a];
      auto [i2, j2] = hub_pairs[b];
      if (i1 == i2 || i1 == j2 || j1 == i2 || j1 == j2) continue;
      for (int x : block[hub_pairs[a]])
        for (int y : block[hub_pairs[b]]) bridge_pairs.emplace_back(std::min(x, y), std::max(x, y));
    }
  }
  std::sort(bridge_pairs.begin(), bridge_pairs.end());
  for (const auto& [x, y] : bridge_pairs) {
    int z = next_label++;
    edges.emplace_back(x, z);
    edges.emplace_back(y, z);
  }

  std::vector<int> vertices;
  for (int v = 0; v < next_label; ++v) vertices.push_back(v);
  out.graph = Graph(vertices, edges);
  return out;
}

Graph random_2degenerate(int n, int attach, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (attach != 1 && attach != 2) throw std::invalid_argument("attach must be 1 or 2");
  Rng rng(seed);
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    vertices.push_back(v);
    int picks = std::min(attach, v);
    if (picks == 1) {
      edges.emplace_back(static_cast<int>(rng.below(v)), v);
    } else if (picks == 2) {
      int a = static_cast<int>(rng.below(v));
      int b = static_cast<int>(rng.below(v - 1));
      if (b >= a) ++b;
      edges.emplace_back(a, v);
      edges.emplace_back(b, v);
    }
  }
  return Graph(vertices, edges);
}

}  // namespace degsq
