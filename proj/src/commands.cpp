#include "degsq/commands.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "degsq/clique.hpp"
#include "degsq/construct.hpp"
#include "degsq/degeneracy.hpp"
#include "degsq/extract.hpp"
#include "degsq/graph.hpp"
#include "degsq/hstar.hpp"
#include "degsq/square.hpp"

namespace degsq::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

class Timer {
 public:
  explicit Timer(json& doc) : doc_(doc), start_(clock::now()), last_(start_) {}

  void stage(const std::string& name) {
    auto now = clock::now();
    doc_["timing_ms"][name] = ms(last_, now);
    last_ = now;
  }

  ~Timer() { doc_["timing_ms"]["total"] = ms(start_, clock::now()); }

 private:
  using clock = std::chrono::steady_clock;
  static double ms(clock::time_point a, clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
  }
  json& doc_;
  clock::time_point start_;
  clock::time_point last_;
};

json make_envelope(const std::string& command) {
  json doc;
  doc["schema_version"] = 1;
  doc["command"] = command;
  doc["inputs"] = json::object();
  return doc;
}

Graph load_graph(json& doc, const std::string& role, const std::string& path) {
  std::string bytes = read_file(path);
  doc["inputs"][role] = {{"path", path}, {"digest", fnv1a_hex(bytes)}};
  return parse_graph(bytes);
}

VertexSet load_vertex_set(json& doc, const std::string& role, const std::string& path) {
  std::string bytes = read_file(path);
  doc["inputs"][role] = {{"path", path}, {"digest", fnv1a_hex(bytes)}};
  std::istringstream in(bytes);
  return parse_vertex_set(in);
}

json set_to_json(const VertexSet& s) { return json(std::vector<int>(s.begin(), s.end())); }

json diagnostics_to_json(const std::vector<DiagnosticRow>& rows) {
  json out = json::array();
  for (const auto& row : rows)
    out.push_back({{"name", row.name}, {"lhs", row.lhs.str()}, {"rhs", row.rhs.str()}, {"holds", row.holds}});
  return out;
}

template <typename F>
auto stage_guard(const std::string& stage, F&& body) {
  try {
    return body();
  } catch (const budget_exhausted&) {
    throw;
  } catch (const std::exception& ex) {
    throw std::invalid_argument(stage + ": " + ex.what());
  }
}

// Everything the extract/hstar/pipeline commands share.
struct ChainResult {
  Graph g;
  VertexSet s;
  ExtractionResult extraction;
  NicenessReport niceness;
  Partition part;
  HStar hstar;
  std::vector<DiagnosticRow> diagnostics;
  PairStats pairs;
  std::optional<JStar> jstar;
};

ChainResult run_chain(Graph g, VertexSet s, int d, std::int64_t secondary_threshold) {
  ChainResult chain;
  chain.g = std::move(g);
  chain.s = std::move(s);
  TokenPassOptions opts;
  opts.secondary_threshold = secondary_threshold;
  chain.extraction = stage_guard("extract", [&] { return extract(chain.g, chain.s, d, opts); });
  chain.niceness = verify_nice(chain.extraction.g_star, chain.extraction.s_star,
                               chain.extraction.sigma_star);
  chain.part = stage_guard("partition", [&] {
    return partition(chain.extraction.g_star, chain.extraction.s_star, chain.extraction.sigma_star);
  });
  chain.hstar = stage_guard("hstar", [&] { return build_hstar(chain.extraction.g_star, chain.part); });
  chain.diagnostics = claim_diagnostics(
      chain.hstar, static_cast<std::int64_t>(chain.extraction.s_star.size()), d);
  chain.pairs = stage_guard(
      "pair-statistics", [&] { return pair_statistics(chain.g, chain.extraction.g_star, chain.s, chain.part, d); });
  if (!chain.part.t_star.empty())
    chain.jstar = stage_guard("jstar", [&] { return build_jstar(chain.g, chain.s, chain.part); });
  return chain;
}

json extraction_to_json(const ChainResult& chain, int d, std::int64_t secondary_threshold) {
  const auto& ex = chain.extraction;
  json out;
  out["d"] = d;
  out["secondary_threshold"] = secondary_threshold;
  out["clique_size"] = chain.s.size();

  json ledger = json::array();
  for (int v : ex.sigma_star.sequence()) {
    ledger.push_back({{"v", v},
                      {"primary", ex.ledger.primary.at(v)},
                      {"secondary", ex.ledger.secondary.at(v)}});
  }
  out["ledger"] = std::move(ledger);
  out["tokens_total"] = ex.ledger.total_tokens();
  out["token_bound"] = 6 * static_cast<std::int64_t>(chain.s.size());
  out["token_bound_holds"] = ex.ledger.total_tokens() <= 6 * static_cast<std::int64_t>(chain.s.size());

  const auto& cls = ex.classification;
  out["classification"] = {{"big", set_to_json(cls.big)},
                           {"basic", set_to_json(cls.basic)},
                           {"nonbasic", set_to_json(cls.nonbasic)},
                           {"w", set_to_json(cls.w)},
                           {"big_size", cls.big.size()},
                           {"basic_size", cls.basic.size()},
                           {"nonbasic_size", cls.nonbasic.size()},
                           {"w_size", cls.w.size()}};
  out["s_star"] = set_to_json(ex.s_star);
  out["s_star_size"] = ex.s_star.size();
  out["s_minus_s_star"] = chain.s.size() - ex.s_star.size();
  out["sigma_star"] = ex.sigma_star.sequence();
  out["niceness"] = {{"clique_in_square", chain.niceness.clique_in_square},
                     {"independent", chain.niceness.independent},
                     {"degeneracy_order_ok", chain.niceness.degeneracy_order_ok},
                     {"consecutive", chain.niceness.consecutive},
                     {"nice", chain.niceness.nice()}};

  auto coverage = token_coverage(ex.ledger, ex.g_star, chain.s, ex.sigma_star, d);
  std::int64_t violations = 0;
  for (const auto& row : coverage)
    if (!row.holds) ++violations;
  out["coverage"] = {{"rows", coverage.size()}, {"violations", violations}};
  return out;
}

json hstar_to_json(const ChainResult& chain) {
  json out;
  out["partition"] = {{"s_star_size", chain.part.s_star.size()},
                      {"t_star", set_to_json(chain.part.t_star)},
                      {"t_star_size", chain.part.t_star.size()},
                      {"r_star_size", chain.part.r_star.size()}};

  json mult = json::array();
  for (const auto& [e, mu] : chain.hstar.multigraph.edge_multiplicities())
    mult.push_back({e.first, e.second, mu});
  out["hstar"] = {{"multiplicities", std::move(mult)},
                  {"irregular", chain.hstar.irregular},
                  {"edge_count", chain.hstar.multigraph.edge_count()},
                  {"source_count", chain.hstar.edge_source.size()}};
  out["diagnostics"] = diagnostics_to_json(chain.diagnostics);

  const auto& ps = chain.pairs;
  json table = json::array();
  for (const auto& row : ps.pairs)
    table.push_back(
        {{"i", row.a}, {"j", row.b}, {"d_ij", row.d_ab}, {"mu_ij", row.mu_ab}, {"s_ij", row.s_ab}});
  json counts = json::array();
  for (const auto& [v, c] : ps.tstar_neighbor_count) counts.push_back({v, c});
  out["pairs"] = {{"table", std::move(table)},
                  {"tstar_neighbor_count", std::move(counts)},
                  {"u_size", ps.u_size},
                  {"w_size", ps.w_size},
                  {"alpha", std::vector<std::int64_t>(ps.alpha.begin() + 1, ps.alpha.end())},
                  {"beta", std::vector<std::int64_t>(ps.beta.begin() + 1, ps.beta.end())},
                  {"u_zero", ps.u_zero},
                  {"w_low", ps.w_low},
                  {"s_sum", ps.s_sum},
                  {"s_sum_by_vertex", ps.s_sum_by_vertex},
                  {"counting_identity_applicable", ps.has_six},
                  {"bucket_rhs", ps.bucket_rhs},
                  {"counting_identity_holds", ps.has_six && ps.s_sum == ps.bucket_rhs},
                  {"aggregate_rhs", ps.aggregate_rhs},
                  {"aggregate_holds", ps.aggregate_holds},
                  {"rows", diagnostics_to_json(ps.rows)}};

  if (chain.jstar) {
    const auto& js = *chain.jstar;
    out["jstar"] = {{"skipped", false},
                    {"x", js.x},
                    {"y", js.y},
                    {"z", js.z},
                    {"bipartite", js.bipartite},
                    {"two_degenerate", js.two_degenerate},
                    {"vertex_count", js.graph.vertex_count()},
                    {"edge_count", js.graph.edge_count()}};
  } else {
    out["jstar"] = {{"skipped", true}, {"reason", "t_star is empty"}};
  }
  return out;
}

}  // namespace

RunReport cmd_gen_tight(int d, const std::string& out_path, const std::string& witness_path) {
  RunReport report;
  report.doc = make_envelope("gen-tight");
  Timer timer(report.doc);
  TightInstance inst = build_tight(d);
  write_file(out_path, serialize_graph(inst.graph));
  json sidecar = {{"d", inst.d},
                  {"k", inst.k},
                  {"r", inst.r},
                  {"hubs", inst.hubs},
                  {"clique_witness", set_to_json(inst.clique_witness)}};
  write_file(out_path + ".json", sidecar.dump(2) + "\n");
  if (!witness_path.empty()) {
    std::ostringstream w;
    for (int v : inst.clique_witness) w << v << "\n";
    write_file(witness_path, w.str());
  }
  timer.stage("build");
  report.doc["results"] = {{"d", inst.d},
                           {"k", inst.k},
                           {"r", inst.r},
                           {"hubs", inst.hubs},
                           {"clique_witness", set_to_json(inst.clique_witness)},
                           {"witness_size", inst.clique_witness.size()},
                           {"vertex_count", inst.graph.vertex_count()},
                           {"edge_count", inst.graph.edge_count()},
                           {"output", out_path}};
  return report;
}

RunReport cmd_gen_random(int n, int attach, std::uint64_t seed, const std::string& out_path) {
  RunReport report;
  report.doc = make_envelope("gen-random");
  Timer timer(report.doc);
  Graph g = random_2degenerate(n, attach, seed);
  write_file(out_path, serialize_graph(g));
  timer.stage("build");
  report.doc["results"] = {{"n", n},
                           {"attach", attach},
                           {"seed", seed},
                           {"vertex_count", g.vertex_count()},
                           {"edge_count", g.edge_count()},
                           {"output", out_path}};
  return report;
}

RunReport cmd_square(const std::string& in_path, const std::string& out_path) {
  RunReport report;
  report.doc = make_envelope("square");
  Timer timer(report.doc);
  Graph g = load_graph(report.doc, "graph", in_path);
  Graph sq = square(g);
  write_file(out_path, serialize_graph(sq));
  timer.stage("square");
  report.doc["results"] = {{"vertex_count", sq.vertex_count()},
                           {"edge_count_in", g.edge_count()},
                           {"edge_count_out", sq.edge_count()},
                           {"output", out_path}};
  return report;
}

RunReport cmd_clique(const std::string& in_path, std::uint64_t node_budget) {
  RunReport report;
  report.doc = make_envelope("clique");
  Timer timer(report.doc);
  Graph g = load_graph(report.doc, "graph", in_path);
  CliqueResult res = max_clique(g, node_budget);
  timer.stage("search");
  report.doc["results"] = {{"size", res.size},
                           {"members", set_to_json(res.members)},
                           {"nodes_explored", res.nodes_explored},
                           {"node_budget", node_budget}};
  return report;
}

RunReport cmd_degeneracy(const std::string& in_path, std::optional<int> k,
                         const std::string& order_out) {
  RunReport report;
  report.doc = make_envelope("degeneracy");
  Timer timer(report.doc);
  Graph g = load_graph(report.doc, "graph", in_path);
  int value = degeneracy(g);
  report.doc["results"]["degeneracy"] = value;
  if (k) {
    auto cert = degeneracy_order(g, *k);
    report.doc["results"]["k"] = *k;
    report.doc["results"]["k_degenerate"] = cert.has_value();
    if (cert) {
      report.doc["results"]["max_later_degree"] = cert->max_later_degree;
      if (!order_out.empty()) write_file(order_out, serialize_order(cert->order));
    }
  } else if (!order_out.empty()) {
    auto cert = degeneracy_order(g, value);
    write_file(order_out, serialize_order(cert->order));
  }
  timer.stage("peel");
  return report;
}

RunReport cmd_mad(const std::string& in_path) {
  RunReport report;
  report.doc = make_envelope("mad");
  Timer timer(report.doc);
  Graph g = load_graph(report.doc, "graph", in_path);
  Density density = mad(g);
  timer.stage("mad");
  report.doc["results"] = {{"value", density.value().str()},
                           {"numerator", density.numerator},
                           {"denominator", density.denominator},
                           {"witness", set_to_json(density.witness)}};
  return report;
}

RunReport cmd_extract_nice(const std::string& graph_path, const std::string& clique_path, int d,
                           std::int64_t secondary_threshold) {
  RunReport report;
  report.doc = make_envelope("extract-nice");
  Timer timer(report.doc);
  Graph g = load_graph(report.doc, "graph", graph_path);
  VertexSet s = load_vertex_set(report.doc, "clique", clique_path);
  ChainResult chain = run_chain(std::move(g), std::move(s), d, secondary_threshold);
  timer.stage("chain");
  report.doc["results"] = extraction_to_json(chain, d, secondary_threshold);
  return report;
}

RunReport cmd_hstar(const std::string& graph_path, const std::string& clique_path, int d,
                    std::int64_t secondary_threshold) {
  RunReport report;
  report.doc = make_envelope("hstar");
  Timer timer(report.doc);
  Graph g = load_graph(report.doc, "graph", graph_path);
  VertexSet s = load_vertex_set(report.doc, "clique", clique_path);
  ChainResult chain = run_chain(std::move(g), std::move(s), d, secondary_threshold);
  timer.stage("chain");
  report.doc["results"] = hstar_to_json(chain);
  report.doc["results"]["niceness"] = {{"nice", chain.niceness.nice()}};
  return report;
}

RunReport cmd_pipeline(const std::string& graph_path, const std::string& clique_path, int d,
                       std::int64_t secondary_threshold) {
  RunReport report;
  report.doc = make_envelope("pipeline");
  Timer timer(report.doc);
  Graph g = load_graph(report.doc, "graph", graph_path);
  VertexSet s = load_vertex_set(report.doc, "clique", clique_path);
  ChainResult chain = run_chain(std::move(g), std::move(s), d, secondary_threshold);
  timer.stage("chain");
  report.doc["results"]["extraction"] = extraction_to_json(chain, d, secondary_threshold);
  report.doc["results"]["analysis"] = hstar_to_json(chain);
  return report;
}

RunReport cmd_verify_tight(const std::vector<int>& d_list, std::uint64_t node_budget) {
  RunReport report;
  report.doc = make_envelope("verify-tight");
  Timer timer(report.doc);
  json checks = json::array();
  bool all_ok = true;
  for (int d : d_list) {
    TightInstance inst = build_tight(d);
    int expected_omega = 5 * d / 2;
    json row;
    row["d"] = d;
    row["max_degree"] = inst.graph.max_degree();
    row["max_degree_ok"] = inst.graph.max_degree() == d;
    row["degeneracy"] = degeneracy(inst.graph);
    row["degeneracy_ok"] = row["degeneracy"] == 2;
    row["witness_size"] = inst.clique_witness.size();
    row["witness_is_square_clique"] = is_clique_in_square(inst.graph, inst.clique_witness);
    CliqueResult res = max_clique(square(inst.graph), node_budget);
    row["omega"] = res.size;
    row["expected_omega"] = expected_omega;
    row["omega_ok"] = res.size == expected_omega;
    row["nodes_explored"] = res.nodes_explored;
    bool ok = row["max_degree_ok"].get<bool>() && row["degeneracy_ok"].get<bool>() &&
              row["omega_ok"].get<bool>() && row["witness_is_square_clique"].get<bool>() &&
              inst.clique_witness.size() == static_cast<std::size_t>(expected_omega);
    row["ok"] = ok;
    all_ok = all_ok && ok;
    checks.push_back(std::move(row));
    timer.stage("d" + std::to_string(d));
  }
  report.doc["results"] = {{"checks", std::move(checks)}, {"all_ok", all_ok}};
  report.exit_code = all_ok ? kExitOk : kExitAssertion;
  return report;
}

RunReport cmd_bound_sweep(int n, int trials, std::uint64_t seed, std::uint64_t node_budget) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  RunReport report;
  report.doc = make_envelope("bound-sweep");
  Timer timer(report.doc);
  json violations = json::array();
  json skipped = json::array();
  Rational max_ratio(0);
  int completed = 0;
  for (int t = 0; t < trials; ++t) {
    Graph g = random_2degenerate(n, 2, seed + static_cast<std::uint64_t>(t));
    int big_d = g.max_degree();
    if (big_d < 2) {
      skipped.push_back({{"trial", t}, {"reason", "max degree below 2"}});
      continue;
    }
    Graph sq = square(g);
    int omega = 0;
    try {
      omega = max_clique(sq, node_budget).size;
    } catch (const budget_exhausted&) {
      skipped.push_back({{"trial", t}, {"reason", "node budget exhausted"}});
      continue;
    }
    int sq_degeneracy = degeneracy(sq);
    int omega_bound = std::min(3 * big_d - 3, 5 * big_d / 2 + 72);
    if (omega > omega_bound)
      violations.push_back({{"trial", t}, {"kind", "omega"}, {"omega", omega}, {"bound", omega_bound}});
    if (sq_degeneracy > 3 * big_d - 4)
      violations.push_back({{"trial", t},
                            {"kind", "square-degeneracy"},
                            {"degeneracy", sq_degeneracy},
                            {"bound", 3 * big_d - 4}});
    Rational ratio(omega, big_d);
    if (ratio > max_ratio) max_ratio = ratio;
    ++completed;
  }
  timer.stage("sweep");
  report.doc["results"] = {{"n", n},
                           {"trials", trials},
                           {"seed", seed},
                           {"completed", completed},
                           {"skipped", skipped},
                           {"violations", violations},
                           {"max_ratio", max_ratio.str()},
                           {"max_ratio_double", max_ratio.to_double()}};
  report.exit_code = violations.empty() ? kExitOk : kExitAssertion;
  return report;
}

RunReport cmd_lp_solutions() {
  RunReport report;
  report.doc = make_envelope("lp-solutions");
  json triples = json::array();
  for (const auto& t : enumerate_integer_solutions()) triples.push_back({t[0], t[1], t[2]});
  report.doc["results"] = {{"solutions", std::move(triples)},
                           {"count", enumerate_integer_solutions().size()}};
  return report;
}

}  // namespace degsq::cli
