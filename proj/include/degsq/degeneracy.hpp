#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "degsq/graph.hpp"
#include "degsq/rational.hpp"

namespace degsq {

struct DegeneracyCertificate {
  VertexOrder order;
  int k = 0;
  int max_later_degree = 0;
};

// Greedy peel: any vertex of current degree <= k may be removed next. Among
// eligible vertices the pick is (smallest current degree, outside `avoid`
// first, smallest label), so `avoid` vertices are pushed as late as possible.
// Absent when g is not k-degenerate.
std::optional<DegeneracyCertificate> degeneracy_order(const Graph& g, int k,
                                                      const VertexSet* avoid = nullptr);

// True iff every vertex has <= k neighbors strictly later in `order`.
// Second component is the maximum later-degree observed either way.
std::pair<bool, int> verify_order(const Graph& g, const VertexOrder& order, int k);

// Smallest k for which a k-degeneracy order exists, by min-degree peeling.
int degeneracy(const Graph& g);

// Maximum of 2|E(H)|/|V(H)| over non-empty induced subgraphs, held exactly.
struct Density {
  std::int64_t numerator = 0;    // 2|E(H)|
  std::int64_t denominator = 1;  // |V(H)|
  VertexSet witness;
  Rational value() const { return Rational(numerator, denominator); }
};

// Exact maximum average degree: binary search over rational densities with a
// min-cut feasibility test; densities have denominator <= |V| so the search
// pins the exact value.
Density mad(const Graph& g);

// Exhaustive subset maximum; |V| <= 15 enforced.
Density mad_oracle(const Graph& g);

}  // namespace degsq
