#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "degsq/graph.hpp"
#include "degsq/rational.hpp"

namespace degsq {

struct Partition {
  VertexSet s_star;
  VertexSet t_star;  // after s_star in the order, with a neighbor in s_star
  VertexSet r_star;  // everything else
};

// Requires s_star consecutive in sigma_star.
Partition partition(const Graph& g_star, const VertexSet& s_star, const VertexOrder& sigma_star);

// Contraction of one s_star-incident edge per s_star vertex onto t_star:
// a vertex with exactly two t_star-neighbors {a,b} contributes one copy of
// edge ab; vertices with any other t_star-neighbor count are only reported,
// since the contraction is not well-defined for them.
struct HStar {
  Multigraph multigraph;                         // on t_star
  std::map<int, std::pair<int, int>> edge_source;  // s_star vertex -> its edge
  std::vector<int> irregular;                    // s_star vertices with != 2 t_star-neighbors
};
HStar build_hstar(const Graph& g_star, const Partition& p);

// One evaluated inequality; `holds` records the comparison, never aborts.
struct DiagnosticRow {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

// Every inequality computable from the contracted multigraph alone, evaluated
// on the concrete instance. Violations are expected on real inputs and are
// informative, not errors.
std::vector<DiagnosticRow> claim_diagnostics(const HStar& h, std::int64_t s_star_size, int d);

struct PairRow {
  int a = 0, b = 0;
  std::int64_t d_ab = 0;   // s_star vertices adjacent to neither a nor b
  std::int64_t mu_ab = 0;  // s_star vertices whose t_star-neighborhood is exactly {a,b}
  std::int64_t s_ab = 0;   // S-vertices outside s_star∪{a,b} adjacent to neither
};

struct PairStats {
  std::vector<PairRow> pairs;
  std::map<int, std::int64_t> tstar_neighbor_count;  // v in S \ s_star -> |N_G(v) ∩ t_star|
  std::int64_t u_size = 0;                           // |S ∩ t_star|
  std::int64_t w_size = 0;                           // |S ∩ r_star|
  std::array<std::int64_t, 6> alpha{};               // alpha[i]: U-vertices with i t_star-neighbors
  std::array<std::int64_t, 6> beta{};                // beta[i]: W-vertices with i+1 t_star-neighbors
  std::int64_t u_zero = 0;                           // U-vertices with no t_star-neighbor
  std::int64_t w_low = 0;                            // W-vertices with <= 1 t_star-neighbors
  // sum_{a<b} s_ab two ways: from the pair sets, and from per-vertex counts.
  std::int64_t s_sum = 0;
  std::int64_t s_sum_by_vertex = 0;  // sum of C(|t_star \ N[v]|, 2); an identity for any t_star
  bool has_six = false;              // |t_star| == 6
  std::int64_t bucket_rhs = 0;       // 6(a1+b1) + 3(a2+b2) + (a3+b3)
  std::int64_t aggregate_rhs = 0;    // 15d - 6|s_star| - 30
  bool aggregate_holds = false;
  std::vector<DiagnosticRow> rows;  // per-pair bounds that need the host graphs
};

// `s` is the original clique (a superset of p.s_star); adjacency for the
// S_{a,b} family is taken in the original graph g.
PairStats pair_statistics(const Graph& g, const Graph& g_star, const VertexSet& s,
                          const Partition& p, int d);

// Bipartite auxiliary graph between (W ∪ U*) and t_star: W keeps its edges to
// t_star, each u in U = S ∩ t_star is re-attached through a fresh copy u*.
struct JStar {
  Graph graph;
  std::vector<std::pair<int, int>> copies;  // (original u, fresh u*)
  std::int64_t x = 0;                       // W ∪ U* vertices with exactly 3 t_star-neighbors
  std::int64_t y = 0;                       // exactly 4
  std::int64_t z = 0;                       // at least 5
  bool bipartite = false;
  bool two_degenerate = false;
};
JStar build_jstar(const Graph& g, const VertexSet& s, const Partition& p);

// Integer points of 3x+5y+6z > 30, x+y+z <= 8, y+z <= 4, z <= 2, all >= 0.
std::set<std::array<int, 3>> enumerate_integer_solutions();

}  // namespace degsq
