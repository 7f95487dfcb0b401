#include "degsq/extract.hpp"

#include <algorithm>

#include "degsq/square.hpp"

namespace degsq {

std::int64_t TokenLedger::tokens(int v) const {
  std::int64_t t = 0;
  if (auto it = primary.find(v); it != primary.end()) t += it->second;
  if (auto it = secondary.find(v); it != secondary.end()) t += it->second;
  return t;
}

std::int64_t TokenLedger::total_tokens() const {
  std::int64_t t = 0;
  for (const auto& [v, c] : primary) t += c;
  for (const auto& [v, c] : secondary) t += c;
  return t;
}

Graph prune_to_clique_support(const Graph& g, const VertexSet& s) {
  if (auto bad = find_non_square_pair(g, s))
    throw std::invalid_argument("set is not a clique in the square: vertices " +
                                std::to_string(bad->first) + " and " + std::to_string(bad->second));
  std::vector<std::pair<int, int>> kept;
  for (const auto& [u, v] : g.edges())
    if (s.count(u) || s.count(v)) kept.emplace_back(u, v);
  return Graph(g.vertices(), kept);
}

TokenLedger run_token_pass(const Graph& g, const VertexSet& s, const VertexOrder& order,
                           const TokenPassOptions& opts) {
  auto [ok, later] = verify_order(g, order, 2);
  if (!ok)
    throw std::invalid_argument("order is not a 2-degeneracy order (max later degree " +
                                std::to_string(later) + ")");
  TokenLedger ledger;
  for (int v : order.sequence()) {
    ledger.primary[v];
    ledger.secondary[v];
  }
  for (int v : order.sequence()) {
    std::size_t pv = *order.position(v);
    // Counts of v are frozen here; everything it hands out goes later.
    std::int64_t held = ledger.primary[v];
    bool in_s = s.count(v) != 0;
    bool relays = held >= opts.secondary_threshold && held >= 1;
    if (!in_s && !relays) continue;
    for (int w : g.neighbors(v)) {
      if (*order.position(w) <= pv) continue;
      if (in_s) ledger.primary[w] += 1;
      if (relays) ledger.secondary[w] += held;
    }
  }
  return ledger;
}

Classification classify(const TokenLedger& ledger, const Graph& g, const VertexSet& s,
                        const VertexOrder& order, int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  Classification out;
  out.d = d;
  // Threshold d/4 - 4 compared exactly: 4*count vs d - 16.
  for (int v : order.sequence()) {
    std::int64_t p = 0;
    if (auto it = ledger.primary.find(v); it != ledger.primary.end()) p = it->second;
    if (4 * p > d - 16) out.big.insert(v);
  }
  for (int v : s) {
    if (4 * ledger.tokens(v) < d - 16)
      out.basic.insert(v);
    else
      out.nonbasic.insert(v);
  }
  for (int v : out.nonbasic) {
    std::size_t pv = *order.position(v);
    for (int w : g.neighbors(v))
      if (*order.position(w) > pv) out.w.insert(w);
  }
  return out;
}

ExtractionResult extract(const Graph& g, const VertexSet& s, int d, const TokenPassOptions& opts) {
  if (g.max_degree() > d)
    throw std::invalid_argument("maximum degree " + std::to_string(g.max_degree()) +
                                " exceeds d = " + std::to_string(d));
  if (!degeneracy_order(g, 2)) throw std::invalid_argument("graph is not 2-degenerate");
  Graph pruned = prune_to_clique_support(g, s);  // also checks the clique precondition
  const VertexOrder base = degeneracy_order(pruned, 2, &s).value().order;

  ExtractionResult out;
  out.ledger = run_token_pass(pruned, s, base, opts);
  out.classification = classify(out.ledger, pruned, s, base, d);

  const auto& cls = out.classification;
  for (int v : cls.basic)
    if (!cls.w.count(v)) out.s_star.insert(v);

  // Rebuild the order: (nonbasic ∪ w) \ big first, untouched middle, big
  // last; relative order within each block is preserved.
  std::vector<int> front, middle, back;
  for (int v : base.sequence()) {
    if (cls.big.count(v))
      back.push_back(v);
    else if (cls.nonbasic.count(v) || cls.w.count(v))
      front.push_back(v);
    else
      middle.push_back(v);
  }
  std::vector<int> seq;
  seq.reserve(front.size() + middle.size() + back.size());
  seq.insert(seq.end(), front.begin(), front.end());
  seq.insert(seq.end(), middle.begin(), middle.end());
  seq.insert(seq.end(), back.begin(), back.end());
  out.sigma_star = VertexOrder(std::move(seq));

  std::vector<std::pair<int, int>> kept;
  for (const auto& [u, v] : pruned.edges())
    if (out.s_star.count(u) || out.s_star.count(v)) kept.emplace_back(u, v);
  out.g_star = Graph(pruned.vertices(), kept);
  return out;
}

NicenessReport verify_nice(const Graph& g_star, const VertexSet& s_star,
                           const VertexOrder& sigma_star) {
  NicenessReport report;
  bool members_ok = true;
  for (int v : s_star)
    if (!g_star.has_vertex(v)) members_ok = false;
  report.clique_in_square = members_ok && is_clique_in_square(g_star, s_star);

  report.independent = true;
  for (const auto& [u, v] : g_star.edges())
    if (s_star.count(u) && s_star.count(v)) report.independent = false;

  if (sigma_star.is_permutation_of(g_star))
    report.degeneracy_order_ok = verify_order(g_star, sigma_star, 2).first;

  report.consecutive = true;
  if (s_star.size() > 1) {
    std::size_t lo = sigma_star.size(), hi = 0;
    bool all_present = true;
    for (int v : s_star) {
      auto pos = sigma_star.position(v);
      if (!pos) {
        all_present = false;
        break;
      }
      lo = std::min(lo, *pos);
      hi = std::max(hi, *pos);
    }
    report.consecutive = all_present && (hi - lo + 1 == s_star.size());
  }
  return report;
}

std::vector<CoverageRow> token_coverage(const TokenLedger& ledger, const Graph& g,
                                        const VertexSet& s, const VertexOrder& order, int d) {
  std::vector<CoverageRow> rows;
  rows.reserve(s.size());
  for (int v : s) {
    auto pos = order.position(v);
    if (!pos) continue;
    std::int64_t later_primaries = 0;
    for (int w : g.neighbors(v)) {
      if (*order.position(w) > *pos) {
        if (auto it = ledger.primary.find(w); it != ledger.primary.end())
          later_primaries += it->second;
      }
    }
    CoverageRow row;
    row.v = v;
    row.bound = 1 + ledger.tokens(v) + d + later_primaries + 6;
    row.clique_size = static_cast<std::int64_t>(s.size());
    row.holds = row.bound >= row.clique_size;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace degsq
