#pragma once

#include <cstdint>
#include <stdexcept>

#include "degsq/graph.hpp"

namespace degsq {

struct budget_exhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliqueResult {
  VertexSet members;
  int size = 0;
  std::uint64_t nodes_explored = 0;
};

// Exact maximum clique: branch and bound with a greedy-coloring upper bound,
// vertices indexed by a degeneracy order of the input. The returned witness
// is the lexicographically smallest maximum clique (as a sorted label set).
// node_budget 0 means unlimited; exceeding the budget throws budget_exhausted
// rather than returning a possibly wrong answer.
CliqueResult max_clique(const Graph& g, std::uint64_t node_budget = 0);

// Exhaustive enumeration of all cliques; |V| <= 20 enforced.
CliqueResult max_clique_oracle(const Graph& g);

}  // namespace degsq
