#include <algorithm>

#include "doctest.h"
#include "degsq/clique.hpp"
#include "degsq/construct.hpp"
#include "degsq/extract.hpp"
#include "degsq/hstar.hpp"
#include "degsq/square.hpp"
#include "helpers.hpp"

using namespace degsq;

namespace {

const DiagnosticRow* find_row(const std::vector<DiagnosticRow>& rows, const std::string& name) {
  for (const auto& row : rows)
    if (row.name == name) return &row;
  return nullptr;
}

}  // namespace

TEST_CASE("partition on toy orders") {
  // 0-1-2 path, s_star = {0}: 1 is after and adjacent, 2 is after but not.
  Graph p3 = testutil::path_graph(3);
  Partition p = partition(p3, {0}, VertexOrder({0, 1, 2}));
  CHECK(p.t_star == VertexSet{1});
  CHECK(p.r_star == VertexSet{2});

  // s_star last: nothing after it.
  Partition tail = partition(p3, {2}, VertexOrder({0, 1, 2}));
  CHECK(tail.t_star.empty());
  CHECK(tail.r_star == VertexSet{0, 1});

  Graph edgeless({0, 1, 2, 3}, {});
  Partition quiet = partition(edgeless, {1}, VertexOrder({1, 0, 2, 3}));
  CHECK(quiet.t_star.empty());
  CHECK(quiet.r_star == VertexSet{0, 2, 3});

  CHECK_THROWS_AS(partition(p3, {0, 2}, VertexOrder({0, 1, 2})), std::invalid_argument);
}

TEST_CASE("hstar contraction with regular and irregular vertices") {
  // s_star vertices 10,11 both see exactly {0,1}; 12 sees only vertex 0.
  Graph g({0, 1, 10, 11, 12},
          {{10, 0}, {10, 1}, {11, 0}, {11, 1}, {12, 0}});
  Partition p;
  p.s_star = {10, 11, 12};
  p.t_star = {0, 1};
  HStar h = build_hstar(g, p);
  CHECK(h.multigraph.multiplicity(0, 1) == 2);
  CHECK(h.edge_source.size() == 2);
  CHECK(h.irregular == std::vector<int>{12});
  CHECK(h.multigraph.edge_count() ==
        static_cast<std::int64_t>(h.edge_source.size()));

  // All regular: the single edge carries one copy per s_star vertex.
  Partition regular;
  regular.s_star = {10, 11};
  regular.t_star = {0, 1};
  HStar parallel = build_hstar(g, regular);
  CHECK(parallel.irregular.empty());
  CHECK(parallel.multigraph.multiplicity(0, 1) ==
        static_cast<std::int64_t>(regular.s_star.size()));
}

TEST_CASE("hstar on the tight instance with headroom") {
  auto inst = build_tight(8);
  auto res = extract(inst.graph, inst.clique_witness, 20);
  Partition p = partition(res.g_star, res.s_star, res.sigma_star);
  CHECK(!p.t_star.empty());
  for (int v : p.r_star) {
    int in_s_star = 0;
    for (int w : res.g_star.neighbors(v))
      if (res.s_star.count(w)) ++in_s_star;
    CHECK(in_s_star <= 2);
  }

  HStar h = build_hstar(res.g_star, p);
  CHECK(h.irregular.empty());
  CHECK(h.multigraph.edge_count() == static_cast<std::int64_t>(res.s_star.size()));
  // Handshake: degree sum counts each contracted edge twice.
  std::int64_t degree_sum = 0;
  for (int v : p.t_star) degree_sum += h.multigraph.degree(v);
  CHECK(degree_sum == 2 * static_cast<std::int64_t>(res.s_star.size()));
  CHECK(underlying_simple(h.multigraph).vertex_count() == p.t_star.size());

  JStar js = build_jstar(inst.graph, inst.clique_witness, p);
  CHECK(js.bipartite);
}

TEST_CASE("extraction keeps the edge count ledger balanced") {
  auto inst = build_tight(12);
  auto res = extract(inst.graph, inst.clique_witness, 12);
  Partition p = partition(res.g_star, res.s_star, res.sigma_star);
  HStar h = build_hstar(res.g_star, p);
  CHECK(h.multigraph.edge_count() + static_cast<std::int64_t>(h.irregular.size()) ==
        static_cast<std::int64_t>(res.s_star.size()));
}

TEST_CASE("diagnostics on a single heavy edge") {
  HStar h;
  h.multigraph = Multigraph({0, 1}, {{0, 1, 5}});
  auto rows = claim_diagnostics(h, 5, 10);
  const auto* off = find_row(rows, "off-edge-count[0-1]");
  REQUIRE(off != nullptr);
  CHECK(off->lhs == Rational(0));
  CHECK(off->rhs == Rational(8));
  CHECK(off->holds);
  // Both endpoints have a single simple neighbor, so the minimum-neighbor
  // check reports a violation; that is informative, not an error.
  const auto* nb = find_row(rows, "min-neighbor-count[0]");
  REQUIRE(nb != nullptr);
  CHECK(!nb->holds);
}

TEST_CASE("diagnostics on two disjoint unit edges") {
  HStar h;
  h.multigraph = Multigraph({0, 1, 2, 3}, {{0, 1, 1}, {2, 3, 1}});
  auto rows = claim_diagnostics(h, 2, 3);
  const auto* off = find_row(rows, "off-edge-count[0-1]");
  REQUIRE(off != nullptr);
  CHECK(off->lhs == Rational(1));
  CHECK(off->rhs == Rational(1));
  CHECK(off->holds);
  const auto* cross = find_row(rows, "disjoint-edge-mult[0-1|2-3]");
  REQUIRE(cross != nullptr);
  CHECK(cross->lhs == Rational(0));
  CHECK(cross->rhs == Rational(2 - 2 * 3 + 2));
  CHECK(cross->holds);
}

TEST_CASE("diagnostics carry both sides on a pipeline run") {
  auto inst = build_tight(16);
  auto res = extract(inst.graph, inst.clique_witness, 36);
  Partition p = partition(res.g_star, res.s_star, res.sigma_star);
  HStar h = build_hstar(res.g_star, p);
  auto rows = claim_diagnostics(h, static_cast<std::int64_t>(res.s_star.size()), 36);
  CHECK(!rows.empty());
  bool has_ratio = false;
  for (const auto& row : rows) {
    CHECK(!row.name.empty());
    if (row.name.rfind("degree-ratio", 0) == 0) {
      has_ratio = true;
      CHECK(row.holds == (row.lhs >= row.rhs));
    }
  }
  CHECK(has_ratio);
}

TEST_CASE("pair statistics on a hand-built partition") {
  // t_star = {0,1}; s_star vertices 10 (sees both), 11 (sees neither);
  // clique also holds 20 (sees neither) and 21 (sees 0 only).
  Graph g({0, 1, 10, 11, 20, 21},
          {{10, 0}, {10, 1}, {11, 20}, {21, 0}});
  Partition p;
  p.s_star = {10, 11};
  p.t_star = {0, 1};
  p.r_star = {20, 21};
  VertexSet s{10, 11, 20, 21};
  PairStats stats = pair_statistics(g, g, s, p, 50);
  REQUIRE(stats.pairs.size() == 1);
  CHECK(stats.pairs[0].d_ab == 1);   // 11
  CHECK(stats.pairs[0].mu_ab == 1);  // 10
  CHECK(stats.pairs[0].s_ab == 1);   // 20, not 21
  CHECK(stats.s_sum == stats.s_sum_by_vertex);
  CHECK(stats.tstar_neighbor_count.at(20) == 0);
  CHECK(stats.tstar_neighbor_count.at(21) == 1);
  CHECK(!stats.has_six);
}

TEST_CASE("membership in the pair families is exclusive") {
  auto inst = build_tight(8);
  auto res = extract(inst.graph, inst.clique_witness, 20);
  Partition p = partition(res.g_star, res.s_star, res.sigma_star);
  PairStats stats = pair_statistics(inst.graph, res.g_star, inst.clique_witness, p, 20);
  for (const auto& row : stats.pairs) {
    // A vertex contributing to mu touches both endpoints, so never counts
    // toward d; sizes stay within the s_star budget.
    CHECK(row.d_ab + row.mu_ab <= static_cast<std::int64_t>(res.s_star.size()));
    CHECK(row.d_ab >= 0);
  }
  CHECK(stats.s_sum == stats.s_sum_by_vertex);
}

TEST_CASE("six-hub pipeline: counting identity and aggregate bound") {
  auto six = testutil::build_six_hub(3);
  CHECK(degeneracy_order(six.graph, 2).has_value());
  CHECK(is_clique_in_square(six.graph, six.witness));

  auto res = extract(six.graph, six.witness, 24);
  auto report = verify_nice(res.g_star, res.s_star, res.sigma_star);
  CHECK(report.nice());
  Partition p = partition(res.g_star, res.s_star, res.sigma_star);
  CHECK(p.t_star.size() == 6);

  PairStats stats = pair_statistics(six.graph, res.g_star, six.witness, p, 24);
  CHECK(stats.has_six);
  CHECK(stats.pairs.size() == 15);
  CHECK(stats.u_zero == 0);
  CHECK(stats.w_low == 0);
  CHECK(stats.s_sum == stats.bucket_rhs);
  CHECK(stats.s_sum == stats.s_sum_by_vertex);

  HStar h = build_hstar(res.g_star, p);
  CHECK(h.irregular.empty());
  std::int64_t pair_d_sum = 0;
  for (const auto& row : stats.pairs) pair_d_sum += row.d_ab;
  CHECK(pair_d_sum == 6 * h.multigraph.edge_count());

  JStar js = build_jstar(six.graph, six.witness, p);
  CHECK(js.bipartite);
  CHECK(js.two_degenerate);
  CHECK(js.x == 0);
  CHECK(js.y == 0);
  CHECK(js.z == 0);
}

TEST_CASE("jstar on hand fixtures") {
  // No clique vertices outside s_star: the graph is t_star with no edges.
  Graph bare({0, 1, 2, 10}, {{10, 0}, {10, 1}});
  Partition p;
  p.s_star = {10};
  p.t_star = {0, 1, 2};
  JStar empty = build_jstar(bare, {10}, p);
  CHECK(empty.graph.vertex_count() == 3);
  CHECK(empty.graph.edge_count() == 0);
  CHECK(empty.x + empty.y + empty.z == 0);
  CHECK(empty.bipartite);
  CHECK(empty.two_degenerate);

  Partition no_t;
  no_t.s_star = {10};
  CHECK_THROWS_AS(build_jstar(bare, {10}, no_t), std::invalid_argument);
}

TEST_CASE("jstar splits clique vertices inside t_star through copies") {
  Graph g({0, 1, 2, 3, 4, 5, 10, 11, 20, 21, 22},
          {{10, 0}, {10, 1}, {11, 2}, {11, 3},
           {20, 0}, {20, 1}, {20, 2},
           {21, 0}, {21, 1}, {21, 2}, {21, 3},
           {22, 0}, {22, 1}, {22, 2}, {22, 3}, {22, 4},
           {5, 0}, {5, 1}, {5, 2}});
  Partition p;
  p.s_star = {10, 11};
  p.t_star = {0, 1, 2, 3, 4, 5};
  p.r_star = {20, 21, 22};
  VertexSet s{10, 11, 20, 21, 22, 5};

  JStar js = build_jstar(g, s, p);
  REQUIRE(js.copies.size() == 1);
  auto [orig, copy] = js.copies[0];
  CHECK(orig == 5);
  CHECK(copy == g.max_label() + 1);
  CHECK(js.graph.has_edge(copy, 5));     // the fresh copy stays tied to its original
  CHECK(!js.graph.has_edge(5, 0));       // original t_star member keeps no direct edges
  CHECK(js.x == 1);                       // 20
  CHECK(js.y == 2);                       // 21 and the copy of 5 (3 neighbors + itself)
  CHECK(js.z == 1);                       // 22
  CHECK(js.bipartite);
  CHECK(!js.two_degenerate);  // W side forms a complete bipartite core with {0,1,2}
}

TEST_CASE("analysis chain soak on irregular random inputs") {
  int analyzed = 0, with_after_set = 0, with_irregular = 0;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Graph g = random_2degenerate(24, 2, seed * 31 + 1);
    VertexSet s = max_clique(square(g)).members;
    int d = g.max_degree() + 4 + static_cast<int>(seed % 40);
    auto res = extract(g, s, d);
    auto niceness = verify_nice(res.g_star, res.s_star, res.sigma_star);
    if (!niceness.consecutive) continue;  // partition requires a consecutive block
    ++analyzed;
    Partition p = partition(res.g_star, res.s_star, res.sigma_star);

    // The three parts tile the vertex set.
    CHECK(p.s_star.size() + p.t_star.size() + p.r_star.size() == g.vertex_count());
    for (int v : p.t_star) CHECK(!p.r_star.count(v));

    HStar h = build_hstar(res.g_star, p);
    if (!h.irregular.empty()) ++with_irregular;
    CHECK(h.multigraph.edge_count() + static_cast<std::int64_t>(h.irregular.size()) ==
          static_cast<std::int64_t>(res.s_star.size()));

    auto rows = claim_diagnostics(h, static_cast<std::int64_t>(res.s_star.size()), d);
    for (const auto& row : rows) CHECK(!row.name.empty());

    PairStats stats = pair_statistics(g, res.g_star, s, p, d);
    CAPTURE(seed);
    CHECK(stats.s_sum == stats.s_sum_by_vertex);  // pair recount identity, any after-set size

    if (!p.t_star.empty()) {
      ++with_after_set;
      JStar js = build_jstar(g, s, p);
      CHECK(js.bipartite);
    }
  }
  CHECK(analyzed >= 6);
  CHECK(with_after_set >= 3);
  CHECK(with_irregular >= 2);
}

TEST_CASE("integer system solutions") {
  auto solutions = enumerate_integer_solutions();
  std::set<std::array<int, 3>> expected = {{4, 4, 0}, {5, 2, 1}, {4, 3, 1},
                                           {5, 1, 2}, {3, 2, 2}, {4, 2, 2}};
  CHECK(solutions == expected);
  CHECK(solutions.size() == 6);
  CHECK(!solutions.count({8, 0, 0}));  // 24 <= 30 fails the first inequality
}
