#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "degsq/degeneracy.hpp"
#include "degsq/graph.hpp"

namespace degsq {

// Degree threshold for which the tight bound is guaranteed:
// 6 * (331*2 + 10*C(331,2) + 2000).
inline constexpr std::int64_t kDegreeThresholdD0 = 3'292'872;

// Per-vertex token counts, frozen at each vertex's deletion time.
struct TokenLedger {
  std::map<int, std::int64_t> primary;
  std::map<int, std::int64_t> secondary;

  std::int64_t tokens(int v) const;
  std::int64_t total_tokens() const;
};

struct TokenPassOptions {
  // Minimum primary count a deleted vertex must hold to relay secondaries.
  std::int64_t secondary_threshold = 1;
};

struct Classification {
  VertexSet big;       // primary(v) > d/4 - 4
  VertexSet basic;     // v in S with tokens(v) < d/4 - 4
  VertexSet nonbasic;  // S \ basic
  VertexSet w;         // later neighbors of nonbasic vertices
  int d = 0;
};

struct NicenessReport {
  bool clique_in_square = false;
  bool independent = false;
  bool degeneracy_order_ok = false;
  bool consecutive = false;
  bool nice() const { return clique_in_square && independent && degeneracy_order_ok && consecutive; }
};

struct ExtractionResult {
  Graph g_star;
  VertexSet s_star;
  VertexOrder sigma_star;
  Classification classification;
  TokenLedger ledger;
};

// Deletes every edge with both endpoints outside s. Any distance-2 witness
// path between s-vertices has its middle vertex adjacent to both, so s stays
// a clique in the square of the result.
Graph prune_to_clique_support(const Graph& g, const VertexSet& s);

// Deletes vertices in order. A deleted s-vertex hands one primary token to
// each later neighbor; a deleted vertex holding p primaries (p >= threshold)
// hands p secondary tokens to each later neighbor. Secondaries never relay.
TokenLedger run_token_pass(const Graph& g, const VertexSet& s, const VertexOrder& order,
                           const TokenPassOptions& opts = {});

Classification classify(const TokenLedger& ledger, const Graph& g, const VertexSet& s,
                        const VertexOrder& order, int d);

// Full chain: prune, biased degeneracy order (s pushed late), token pass,
// classification, then the order and edge surgery that make the triple nice.
ExtractionResult extract(const Graph& g, const VertexSet& s, int d,
                         const TokenPassOptions& opts = {});

NicenessReport verify_nice(const Graph& g_star, const VertexSet& s_star,
                           const VertexOrder& sigma_star);

// Accounting rows: for each v in s, every s-vertex square-adjacent to v is
// reachable through v's tokens, its later neighbors' primaries, or a short
// fixed list, so 1 + tokens(v) + d + primary(w1) + primary(w2) + 6 >= |s|
// whenever the secondary threshold is 1.
struct CoverageRow {
  int v = 0;
  std::int64_t bound = 0;
  std::int64_t clique_size = 0;
  bool holds = false;
};
std::vector<CoverageRow> token_coverage(const TokenLedger& ledger, const Graph& g,
                                        const VertexSet& s, const VertexOrder& order, int d);

}  // namespace degsq
