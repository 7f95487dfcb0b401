#include "degsq/degeneracy.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <tuple>
#include <vector>

namespace degsq {

namespace {

// Peel key: (current degree, avoid flag, label).
using PeelKey = std::tuple<int, int, int>;

struct PeelState {
  const Graph& g;
  std::vector<int> deg;       // by dense index
  std::vector<bool> removed;  // by dense index
  std::set<PeelKey> pool;
  std::vector<int> avoid_flag;

  PeelState(const Graph& g, const VertexSet* avoid) : g(g) {
    std::size_t n = g.vertex_count();
    deg.resize(n);
    removed.assign(n, false);
    avoid_flag.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      int v = g.label_at(i);
      deg[i] = g.degree(v);
      if (avoid && avoid->count(v)) avoid_flag[i] = 1;
      pool.insert({deg[i], avoid_flag[i], v});
    }
  }

  // Removes the minimum-key vertex, returns (label, degree at removal).
  std::pair<int, int> pop() {
    auto [d, a, v] = *pool.begin();
    pool.erase(pool.begin());
    int idx = g.index_of(v);
    removed[idx] = true;
    for (int w : g.neighbors(v)) {
      int widx = g.index_of(w);
      if (removed[widx]) continue;
      pool.erase({deg[widx], avoid_flag[widx], w});
      --deg[widx];
      pool.insert({deg[widx], avoid_flag[widx], w});
    }
    return {v, d};
  }
};

}  // namespace

std::optional<DegeneracyCertificate> degeneracy_order(const Graph& g, int k, const VertexSet* avoid) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  PeelState state(g, avoid);
  std::vector<int> seq;
  seq.reserve(g.vertex_count());
  int max_later = 0;
  while (!state.pool.empty()) {
    if (std::get<0>(*state.pool.begin()) > k) return std::nullopt;
    auto [v, d] = state.pop();
    seq.push_back(v);
    max_later = std::max(max_later, d);
  }
  return DegeneracyCertificate{VertexOrder(std::move(seq)), k, max_later};
}

std::pair<bool, int> verify_order(const Graph& g, const VertexOrder& order, int k) {
  if (!order.is_permutation_of(g)) throw std::invalid_argument("order is not a permutation of V(g)");
  int max_later = 0;
  for (int v : order.sequence()) {
    std::size_t pv = *order.position(v);
    int later = 0;
    for (int w : g.neighbors(v))
      if (*order.position(w) > pv) ++later;
    max_later = std::max(max_later, later);
  }
  return {max_later <= k, max_later};
}

int degeneracy(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("degeneracy of empty graph");
  PeelState state(g, nullptr);
  int worst = 0;
  while (!state.pool.empty()) worst = std::max(worst, state.pop().second);
  return worst;
}

namespace {

// Dinic max-flow on a small dense network; capacities are int64.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : head_(n, -1), level_(n), iter_(n) {}

  void add_edge(int from, int to, std::int64_t cap) {
    edges_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(edges_.size()) - 1;
  }

  std::int64_t run(int s, int t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      std::int64_t f;
      while ((f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) > 0) flow += f;
    }
    return flow;
  }

  // Source side of the min cut: vertices reachable from s in the residual.
  std::vector<bool> source_side(int s) const {
    std::vector<bool> seen(head_.size(), false);
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e = head_[u]; e != -1; e = edges_[e].next) {
        if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
          seen[edges_[e].to] = true;
          q.push(edges_[e].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Edge {
    int to;
    int next;
    std::int64_t cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e = head_[u]; e != -1; e = edges_[e].next) {
        if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[u] + 1;
          q.push(edges_[e].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(int u, int t, std::int64_t limit) {
    if (u == t) return limit;
    for (int& e = iter_[u]; e != -1; e = edges_[e].next) {
      Edge& ed = edges_[e];
      if (ed.cap > 0 && level_[ed.to] == level_[u] + 1) {
        std::int64_t f = dfs(ed.to, t, std::min(limit, ed.cap));
        if (f > 0) {
          ed.cap -= f;
          edges_[e ^ 1].cap += f;
          return f;
        }
      }
    }
    return 0;
  }

  std::vector<Edge> edges_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

std::int64_t edges_inside(const Graph& g, const VertexSet& s) {
  std::int64_t m = 0;
  for (const auto& [u, v] : g.edges())
    if (s.count(u) && s.count(v)) ++m;
  return m;
}

// Is there a non-empty A with 2|E(A)|/|A| > p/q?  If so returns a witness.
// Network: s->v with cap 2q*deg(v), v->t with cap 2p, both arc directions of
// each edge with cap 2q.  Min cut equals 4qm - 2*max_A(2q*|E(A)| - p*|A|).
std::optional<VertexSet> denser_than(const Graph& g, std::int64_t p, std::int64_t q) {
  const auto& vs = g.vertices();
  int n = static_cast<int>(vs.size());
  std::int64_t m = static_cast<std::int64_t>(g.edge_count());
  int source = n, sink = n + 1;
  MaxFlow net(n + 2);
  for (int i = 0; i < n; ++i) {
    net.add_edge(source, i, 2 * q * g.degree(vs[i]));
    net.add_edge(i, sink, 2 * p);
  }
  for (const auto& [u, v] : g.edges()) {
    int ui = g.index_of(u), vi = g.index_of(v);
    net.add_edge(ui, vi, 2 * q);
    net.add_edge(vi, ui, 2 * q);
  }
  std::int64_t cut = net.run(source, sink);
  if (cut >= 4 * q * m) return std::nullopt;
  auto side = net.source_side(source);
  VertexSet witness;
  for (int i = 0; i < n; ++i)
    if (side[i]) witness.insert(vs[i]);
  return witness;
}

}  // namespace

Density mad(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("mad of empty graph");
  std::int64_t n = static_cast<std::int64_t>(g.vertex_count());
  std::int64_t m = static_cast<std::int64_t>(g.edge_count());

  Density best;
  best.numerator = 2 * m;
  best.denominator = n;
  best.witness = VertexSet(g.vertices().begin(), g.vertices().end());

  // Distinct densities 2e/|A| differ by at least 2/n^2; grid 1/K separates.
  const std::int64_t K = n * n;
  Rational lo = best.value();
  Rational hi(n);  // mad <= n-1 < n
  const Rational gap(2, K);
  while (hi - lo >= gap) {
    Rational center = (lo + hi) / Rational(2);
    // Nearest grid point, clamped strictly inside (lo, hi).
    std::int64_t ticks = static_cast<std::int64_t>(
        (static_cast<__int128>(center.num()) * K + center.den() / 2) / center.den());
    Rational mid(ticks, K);
    if (mid <= lo) {
      std::int64_t up = static_cast<std::int64_t>(
          (static_cast<__int128>(lo.num()) * K) / lo.den()) + 1;
      mid = Rational(up, K);
    }
    if (mid >= hi) {
      std::int64_t down = static_cast<std::int64_t>(
          (static_cast<__int128>(hi.num()) * K + hi.den() - 1) / hi.den()) - 1;
      mid = Rational(down, K);
    }
    auto witness = denser_than(g, mid.num(), mid.den());
    if (witness) {
      std::int64_t e = edges_inside(g, *witness);
      Density cand;
      cand.numerator = 2 * e;
      cand.denominator = static_cast<std::int64_t>(witness->size());
      cand.witness = std::move(*witness);
      lo = cand.value();
      best = std::move(cand);
    } else {
      hi = mid;
    }
  }
  return best;
}

Density mad_oracle(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("mad of empty graph");
  if (g.vertex_count() > 15) throw std::length_error("mad_oracle limited to 15 vertices");
  const auto& vs = g.vertices();
  int n = static_cast<int>(vs.size());
  std::vector<std::pair<int, int>> edge_idx;
  for (const auto& [u, v] : g.edges()) edge_idx.emplace_back(g.index_of(u), g.index_of(v));

  Density best;
  best.numerator = 0;
  best.denominator = 1;
  best.witness = {vs[0]};
  Rational best_value(0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::int64_t e = 0;
    for (const auto& [ui, vi] : edge_idx)
      if ((mask >> ui & 1) && (mask >> vi & 1)) ++e;
    std::int64_t size = __builtin_popcount(mask);
    Rational value(2 * e, size);
    if (value > best_value) {
      best_value = value;
      best.numerator = 2 * e;
      best.denominator = size;
      best.witness.clear();
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) best.witness.insert(vs[i]);
    }
  }
  return best;
}

}  // namespace degsq
