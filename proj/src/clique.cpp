#include "degsq/clique.hpp"

#include <algorithm>
#include <vector>

#include "degsq/degeneracy.hpp"

namespace degsq {

namespace {

// Fixed-width bitset over internal vertex indices.
struct Bits {
  std::vector<std::uint64_t> w;

  explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
  void set(std::size_t i) { w[i >> 6] |= 1ull << (i & 63); }
  void reset(std::size_t i) { w[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(std::size_t i) const { return w[i >> 6] >> (i & 63) & 1; }
  bool empty() const {
    for (auto x : w)
      if (x) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r(*this);
    for (std::size_t k = 0; k < w.size(); ++k) r.w[k] &= o.w[k];
    return r;
  }
  template <typename F>
  void for_each(F f) const {
    for (std::size_t k = 0; k < w.size(); ++k) {
      std::uint64_t bits = w[k];
      while (bits) {
        f((k << 6) + static_cast<std::size_t>(__builtin_ctzll(bits)));
        bits &= bits - 1;
      }
    }
  }
};

class Searcher {
 public:
  Searcher(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {
    n_ = g.vertex_count();
    // Internal index = position in a degeneracy order of the input.
    auto cert = degeneracy_order(g, n_ == 0 ? 0 : g.max_degree());
    labels_.reserve(n_);
    for (int v : cert->order.sequence()) labels_.push_back(v);
    slot_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) slot_[g.index_of(labels_[i])] = i;
    adj_.assign(n_, Bits(n_));
    for (const auto& [u, v] : g.edges()) {
      std::size_t ui = slot_[g.index_of(u)], vi = slot_[g.index_of(v)];
      adj_[ui].set(vi);
      adj_[vi].set(ui);
    }
  }

  CliqueResult run() {
    CliqueResult result;
    if (n_ == 0) return result;

    best_ = greedy_clique_size();
    Bits all(n_);
    for (std::size_t i = 0; i < n_; ++i) all.set(i);
    expand(all, 0);
    result.size = best_;

    // Lexicographically smallest witness, built one vertex at a time in
    // ascending label order; each candidate is kept only if the prefix still
    // completes to a maximum clique.
    std::vector<std::size_t> by_label(n_);
    for (std::size_t i = 0; i < n_; ++i) by_label[i] = i;
    std::sort(by_label.begin(), by_label.end(),
              [&](std::size_t a, std::size_t b) { return labels_[a] < labels_[b]; });
    std::vector<Bits> greater_label(n_, Bits(n_));
    {
      Bits acc(n_);
      for (std::size_t r = n_; r-- > 0;) {
        greater_label[by_label[r]] = acc;
        acc.set(by_label[r]);
      }
    }

    Bits pool(all);
    int chosen = 0;
    while (chosen < best_) {
      bool advanced = false;
      for (std::size_t idx : by_label) {
        if (!pool.test(idx)) continue;
        Bits cand = (pool & adj_[idx]) & greater_label[idx];
        int need = best_ - chosen - 1;
        if (need == 0 || decide(cand, need)) {
          result.members.insert(labels_[idx]);
          pool = cand;
          ++chosen;
          advanced = true;
          break;
        }
        pool.reset(idx);
      }
      if (!advanced) throw std::logic_error("witness reconstruction lost the optimum");
    }
    result.nodes_explored = nodes_;
    return result;
  }

 private:
  void tick() {
    ++nodes_;
    if (budget_ && nodes_ > budget_) throw budget_exhausted("clique node budget exhausted");
  }

  int greedy_clique_size() const {
    Bits cand(n_);
    for (std::size_t i = 0; i < n_; ++i) cand.set(i);
    int size = 0;
    while (!cand.empty()) {
      std::size_t pick = 0;
      int pick_deg = -1;
      cand.for_each([&](std::size_t v) {
        int d = (cand & adj_[v]).count();
        if (d > pick_deg) {
          pick_deg = d;
          pick = v;
        }
      });
      ++size;
      cand = cand & adj_[pick];
    }
    return size;
  }

  // Greedy coloring of P in internal-index order; returns vertices sorted by
  // color (ascending), which bounds the clique extension per vertex.
  void color_sort(const Bits& P, std::vector<std::pair<std::size_t, int>>& out) {
    out.clear();
    classes_.clear();
    P.for_each([&](std::size_t v) {
      std::size_t c = 0;
      while (c < classes_.size() && !(classes_[c] & adj_[v]).empty()) ++c;
      if (c == classes_.size()) classes_.emplace_back(Bits(n_));
      classes_[c].set(v);
    });
    for (std::size_t c = 0; c < classes_.size(); ++c)
      classes_[c].for_each([&](std::size_t v) { out.emplace_back(v, static_cast<int>(c) + 1); });
  }

  void expand(Bits P, int rsize) {
    tick();
    if (P.empty()) {
      if (rsize > best_) best_ = rsize;
      return;
    }
    std::vector<std::pair<std::size_t, int>> order;
    color_sort(P, order);
    for (std::size_t i = order.size(); i-- > 0;) {
      auto [v, c] = order[i];
      if (rsize + c <= best_) return;
      expand(P & adj_[v], rsize + 1);
      P.reset(v);
    }
  }

  // Is there a clique of size >= need inside P?
  bool decide(Bits P, int need) {
    tick();
    if (need <= 0) return true;
    if (P.count() < need) return false;
    std::vector<std::pair<std::size_t, int>> order;
    color_sort(P, order);
    for (std::size_t i = order.size(); i-- > 0;) {
      auto [v, c] = order[i];
      if (c < need) return false;
      if (decide(P & adj_[v], need - 1)) return true;
      P.reset(v);
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_ = 0;
  std::uint64_t budget_ = 0;
  std::uint64_t nodes_ = 0;
  int best_ = 0;
  std::vector<int> labels_;        // internal index -> label
  std::vector<std::size_t> slot_;  // dense graph index -> internal index
  std::vector<Bits> adj_;
  std::vector<Bits> classes_;
};

}  // namespace

CliqueResult max_clique(const Graph& g, std::uint64_t node_budget) {
  return Searcher(g, node_budget).run();
}

namespace {

struct OracleState {
  const Graph& g;
  std::vector<Bits> adj;
  std::vector<int> current;
  std::vector<int> best;
  std::uint64_t visited = 0;

  explicit OracleState(const Graph& g) : g(g) {
    std::size_t n = g.vertex_count();
    adj.assign(n, Bits(n));
    for (const auto& [u, v] : g.edges()) {
      std::size_t ui = g.index_of(u), vi = g.index_of(v);
      adj[ui].set(vi);
      adj[vi].set(ui);
    }
  }

  // Enumerates every clique in ascending lexicographic order, so the first
  // clique of maximum size seen is the lexicographically smallest one.
  void visit(const Bits& cand, std::size_t from) {
    ++visited;
    if (current.size() > best.size()) best = current;
    for (std::size_t v = from; v < g.vertex_count(); ++v) {
      if (!cand.test(v)) continue;
      current.push_back(g.label_at(v));
      visit(cand & adj[v], v + 1);
      current.pop_back();
    }
  }
};

}  // namespace

CliqueResult max_clique_oracle(const Graph& g) {
  if (g.vertex_count() > 20) throw std::length_error("max_clique_oracle limited to 20 vertices");
  CliqueResult result;
  if (g.vertex_count() == 0) return result;
  OracleState state(g);
  Bits all(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) all.set(i);
  state.visit(all, 0);
  result.members = VertexSet(state.best.begin(), state.best.end());
  result.size = static_cast<int>(state.best.size());
  result.nodes_explored = state.visited;
  return result;
}

}  // namespace degsq
