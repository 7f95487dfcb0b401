#include "degsq/hstar.hpp"

#include <algorithm>
#include <queue>

#include "degsq/degeneracy.hpp"

namespace degsq {

Partition partition(const Graph& g_star, const VertexSet& s_star, const VertexOrder& sigma_star) {
  if (!sigma_star.is_permutation_of(g_star))
    throw std::invalid_argument("order is not a permutation of the graph");
  Partition out;
  out.s_star = s_star;
  std::size_t first = sigma_star.size(), last = 0;
  for (int v : s_star) {
    auto pos = sigma_star.position(v);
    if (!pos) throw std::invalid_argument("s_star vertex missing from order");
    first = std::min(first, *pos);
    last = std::max(last, *pos);
  }
  if (!s_star.empty() && last - first + 1 != s_star.size())
    throw std::invalid_argument("s_star is not consecutive in the order");
  for (int v : g_star.vertices()) {
    if (s_star.count(v)) continue;
    bool after = !s_star.empty() && *sigma_star.position(v) > last;
    bool touches = false;
    if (after) {
      for (int w : g_star.neighbors(v)) {
        if (s_star.count(w)) {
          touches = true;
          break;
        }
      }
    }
    if (after && touches)
      out.t_star.insert(v);
    else
      out.r_star.insert(v);
  }
  return out;
}

HStar build_hstar(const Graph& g_star, const Partition& p) {
  for (int v : p.s_star)
    if (!g_star.has_vertex(v)) throw std::invalid_argument("partition inconsistent with graph");
  HStar out;
  std::vector<std::tuple<int, int, std::int64_t>> edges;
  for (int v : p.s_star) {
    std::vector<int> tn;
    for (int w : g_star.neighbors(v))
      if (p.t_star.count(w)) tn.push_back(w);
    if (tn.size() == 2) {
      edges.emplace_back(tn[0], tn[1], 1);
      out.edge_source[v] = {tn[0], tn[1]};
    } else {
      out.irregular.push_back(v);
    }
  }
  out.multigraph = Multigraph(std::vector<int>(p.t_star.begin(), p.t_star.end()), edges);
  return out;
}

namespace {

void push_row(std::vector<DiagnosticRow>& rows, std::string name, Rational lhs, Rational rhs,
              bool at_least) {
  DiagnosticRow row;
  row.name = std::move(name);
  row.lhs = lhs;
  row.rhs = rhs;
  row.holds = at_least ? lhs >= rhs : lhs <= rhs;
  rows.push_back(std::move(row));
}

std::string pair_tag(int a, int b) { return std::to_string(a) + "-" + std::to_string(b); }

}  // namespace

std::vector<DiagnosticRow> claim_diagnostics(const HStar& h, std::int64_t s_star_size, int d) {
  std::vector<DiagnosticRow> rows;
  const Multigraph& mg = h.multigraph;
  const auto& ts = mg.vertices();
  std::int64_t m = mg.edge_count();
  const Rational s_star(s_star_size);
  const Rational D(d);

  std::map<int, std::int64_t> deg;
  for (int v : ts) deg[v] = mg.degree(v);

  for (int v : ts)
    push_row(rows, "min-neighbor-count[" + std::to_string(v) + "]",
             Rational(static_cast<std::int64_t>(mg.simple_neighbors(v).size())), Rational(2), true);

  for (const auto& [e, mu] : mg.edge_multiplicities()) {
    auto [u, v] = e;
    Rational shared(deg[u] + deg[v] - mu);
    push_row(rows, "edge-degree-sum[" + pair_tag(u, v) + "]", shared, s_star - D + Rational(2), true);
    push_row(rows, "off-edge-count[" + pair_tag(u, v) + "]", Rational(m) - shared, D - Rational(2),
             false);
  }

  for (int v : ts) {
    for (int w : mg.simple_neighbors(v)) {
      push_row(rows, "ray-mult-sum[" + std::to_string(v) + "|" + std::to_string(w) + "]",
               Rational(deg[v] - mg.multiplicity(v, w)), s_star - Rational(2) * D + Rational(2),
               true);
    }
  }

  for (int v : ts) {
    std::int64_t nb = static_cast<std::int64_t>(mg.simple_neighbors(v).size());
    if (nb >= 2) {
      Rational rhs = Rational(nb) * (s_star - Rational(2) * D + Rational(2)) / Rational(nb - 1);
      push_row(rows, "degree-ratio[" + std::to_string(v) + "]", Rational(deg[v]), rhs, true);
    }
  }

  // Pairs of vertex-disjoint edges of the underlying simple graph.
  std::vector<std::pair<int, int>> simple_edges;
  for (const auto& [e, mu] : mg.edge_multiplicities()) simple_edges.push_back(e);
  for (std::size_t i = 0; i < simple_edges.size(); ++i) {
    for (std::size_t j = i + 1; j < simple_edges.size(); ++j) {
      auto [v, w] = simple_edges[i];
      auto [x, y] = simple_edges[j];
      if (v == x || v == y || w == x || w == y) continue;
      Rational cross(mg.multiplicity(v, x) + mg.multiplicity(v, y) + mg.multiplicity(w, x) +
                     mg.multiplicity(w, y));
      push_row(rows, "disjoint-edge-mult[" + pair_tag(v, w) + "|" + pair_tag(x, y) + "]", cross,
               s_star - Rational(2) * D + Rational(2), true);
    }
  }

  for (int v : ts) {
    push_row(rows, "degree-upper[" + std::to_string(v) + "]", Rational(deg[v]),
             (Rational(25) * D - Rational(9) * s_star - Rational(50)) / Rational(3), false);
    push_row(rows, "degree-lower[" + std::to_string(v) + "]", Rational(deg[v]),
             (Rational(3) * s_star - Rational(5) * D + Rational(10)) / Rational(3), true);
  }

  // Edges avoiding both elements of each vertex pair, counted in the
  // multigraph; bounded below through the total count.
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      int u = ts[i], v = ts[j];
      Rational off(m - deg[u] - deg[v] + mg.multiplicity(u, v));
      push_row(rows, "pair-off-count[" + pair_tag(u, v) + "]", off,
               Rational(6) * s_star - Rational(14) * D + Rational(28), true);
      push_row(rows, "mult-lower[" + pair_tag(u, v) + "]", Rational(mg.multiplicity(u, v)),
               (Rational(87) * s_star - Rational(217) * D + Rational(374)) / Rational(3), true);
    }
  }
  return rows;
}

PairStats pair_statistics(const Graph& g, const Graph& g_star, const VertexSet& s,
                          const Partition& p, int d) {
  for (int v : p.s_star)
    if (!s.count(v)) throw std::invalid_argument("s must contain every s_star vertex");
  PairStats out;
  const std::vector<int> ts(p.t_star.begin(), p.t_star.end());
  const std::int64_t s_star_size = static_cast<std::int64_t>(p.s_star.size());

  // Per s_star vertex: its t_star-neighborhood in g_star.
  std::map<int, std::vector<int>> star_tn;
  for (int v : p.s_star) {
    auto& tn = star_tn[v];
    for (int w : g_star.neighbors(v))
      if (p.t_star.count(w)) tn.push_back(w);
  }

  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      PairRow row;
      row.a = ts[i];
      row.b = ts[j];
      for (int v : p.s_star) {
        const auto& tn = star_tn[v];
        if (!g_star.has_edge(v, row.a) && !g_star.has_edge(v, row.b)) ++row.d_ab;
        if (tn.size() == 2 && ((tn[0] == row.a && tn[1] == row.b) || (tn[0] == row.b && tn[1] == row.a)))
          ++row.mu_ab;
      }
      for (int v : s) {
        if (p.s_star.count(v) || v == row.a || v == row.b) continue;
        if (!g.has_edge(v, row.a) && !g.has_edge(v, row.b)) ++row.s_ab;
      }
      out.s_sum += row.s_ab;
      out.rows.push_back(DiagnosticRow{"s-pair-upper[" + pair_tag(row.a, row.b) + "]",
                                       Rational(row.s_ab),
                                       Rational(d - 2 - row.d_ab),
                                       row.s_ab <= d - 2 - row.d_ab});

      // Support count: r_star neighbors of each mu-vertex that also see the
      // d_ab family; the minimum over the family is the binding value.
      bool first = true;
      std::int64_t min_support = 0;
      for (int v : p.s_star) {
        const auto& tn = star_tn[v];
        if (!(tn.size() == 2 &&
              ((tn[0] == row.a && tn[1] == row.b) || (tn[0] == row.b && tn[1] == row.a))))
          continue;
        std::int64_t support = 0;
        for (int w : g_star.neighbors(v)) {
          if (!p.r_star.count(w)) continue;
          bool sees = false;
          for (int u : g_star.neighbors(w)) {
            if (u == v || !p.s_star.count(u)) continue;
            const auto& utn = star_tn[u];
            bool ua = std::find(utn.begin(), utn.end(), row.a) != utn.end();
            bool ub = std::find(utn.begin(), utn.end(), row.b) != utn.end();
            if (!ua && !ub) {
              sees = true;
              break;
            }
          }
          if (sees) ++support;
        }
        if (first || support < min_support) min_support = support;
        first = false;
      }
      if (!first) {
        out.rows.push_back(DiagnosticRow{"support-lower[" + pair_tag(row.a, row.b) + "]",
                                         Rational(min_support), Rational(row.d_ab),
                                         min_support >= row.d_ab});
      }
      out.pairs.push_back(row);
    }
  }

  for (int v : s) {
    if (p.s_star.count(v)) continue;
    std::int64_t count = 0;
    for (int w : g.neighbors(v))
      if (p.t_star.count(w)) ++count;
    out.tstar_neighbor_count[v] = count;
    bool in_t = p.t_star.count(v) != 0;
    if (in_t) ++out.u_size;
    if (p.r_star.count(v)) ++out.w_size;
    // Closed-neighborhood complement in t_star drives the pair membership.
    std::int64_t missing = static_cast<std::int64_t>(p.t_star.size()) - count - (in_t ? 1 : 0);
    out.s_sum_by_vertex += missing * (missing - 1) / 2;
    if (in_t) {
      if (count >= 1 && count <= 5)
        ++out.alpha[count];
      else
        ++out.u_zero;
    } else if (p.r_star.count(v)) {
      if (count >= 2 && count <= 6)
        ++out.beta[count - 1];
      else
        ++out.w_low;
    }
  }

  out.has_six = p.t_star.size() == 6;
  out.bucket_rhs = 6 * (out.alpha[1] + out.beta[1]) + 3 * (out.alpha[2] + out.beta[2]) +
                   (out.alpha[3] + out.beta[3]);
  out.aggregate_rhs = 15ll * d - 6 * s_star_size - 30;
  out.aggregate_holds = out.s_sum <= out.aggregate_rhs;
  return out;
}

namespace {

bool check_bipartite(const Graph& g, const VertexSet& left, const VertexSet& right) {
  for (const auto& [u, v] : g.edges()) {
    bool ul = left.count(u) != 0, vl = left.count(v) != 0;
    bool ur = right.count(u) != 0, vr = right.count(v) != 0;
    if (!((ul && vr) || (ur && vl))) return false;
  }
  return true;
}

}  // namespace

JStar build_jstar(const Graph& g, const VertexSet& s, const Partition& p) {
  if (p.t_star.empty()) throw std::invalid_argument("t_star must be non-empty");
  JStar out;

  VertexSet u_set, w_set;
  for (int v : s) {
    if (p.s_star.count(v)) continue;
    if (p.t_star.count(v)) u_set.insert(v);
    if (p.r_star.count(v)) w_set.insert(v);
  }

  int fresh = g.max_label() + 1;
  std::map<int, int> copy_of;
  for (int u : u_set) {
    copy_of[u] = fresh;
    out.copies.emplace_back(u, fresh);
    ++fresh;
  }

  std::vector<int> vertices(p.t_star.begin(), p.t_star.end());
  vertices.insert(vertices.end(), w_set.begin(), w_set.end());
  for (const auto& [u, c] : copy_of) vertices.push_back(c);

  std::vector<std::pair<int, int>> edges;
  for (int w : w_set)
    for (int v : g.neighbors(w))
      if (p.t_star.count(v)) edges.emplace_back(w, v);
  for (int u : u_set) {
    for (int v : g.neighbors(u))
      if (p.t_star.count(v)) edges.emplace_back(copy_of[u], v);
    edges.emplace_back(copy_of[u], u);
  }
  out.graph = Graph(vertices, edges);

  VertexSet side;  // W ∪ U*
  for (int w : w_set) side.insert(w);
  for (const auto& [u, c] : copy_of) side.insert(c);
  for (int v : side) {
    std::int64_t t_nbrs = 0;
    for (int w : out.graph.neighbors(v))
      if (p.t_star.count(w)) ++t_nbrs;
    if (t_nbrs == 3) ++out.x;
    if (t_nbrs == 4) ++out.y;
    if (t_nbrs >= 5) ++out.z;
  }

  out.bipartite = check_bipartite(out.graph, side, p.t_star);
  out.two_degenerate = degeneracy_order(out.graph, 2).has_value();
  return out;
}

std::set<std::array<int, 3>> enumerate_integer_solutions() {
  std::set<std::array<int, 3>> out;
  for (int x = 0; x <= 8; ++x)
    for (int y = 0; y <= 8; ++y)
      for (int z = 0; z <= 8; ++z)
        if (3 * x + 5 * y + 6 * z > 30 && x + y + z <= 8 && y + z <= 4 && z <= 2)
          out.insert({x, y, z});
  return out;
}

}  // namespace degsq
