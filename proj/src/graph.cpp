#include "degsq/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace degsq {

namespace {

std::pair<int, int> canonical(int u, int v) { return u < v ? std::make_pair(u, v) : std::make_pair(v, u); }

void check_label(int v) {
  if (v < 0) throw std::invalid_argument("vertex labels must be non-negative, got " + std::to_string(v));
}

}  // namespace

Graph::Graph(const std::vector<int>& vertices, const std::vector<std::pair<int, int>>& edges) {
  verts_ = vertices;
  for (const auto& [u, v] : edges) {
    verts_.push_back(u);
    verts_.push_back(v);
  }
  for (int v : verts_) check_label(v);
  std::sort(verts_.begin(), verts_.end());
  verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());

  edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    edges_.push_back(canonical(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  index_.reserve(verts_.size());
  for (std::size_t i = 0; i < verts_.size(); ++i) index_[verts_[i]] = static_cast<int>(i);
  adj_.resize(verts_.size());
  for (const auto& [u, v] : edges_) {
    adj_[index_[u]].push_back(v);
    adj_[index_[v]].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  auto it = index_.find(u);
  if (it == index_.end()) return false;
  const auto& nbrs = adj_[it->second];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::span<const int> Graph::neighbors(int v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
  return adj_[it->second];
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
  return d;
}

int Graph::index_of(int label) const {
  auto it = index_.find(label);
  return it == index_.end() ? -1 : it->second;
}

Multigraph::Multigraph(const std::vector<int>& vertices,
                       const std::vector<std::tuple<int, int, std::int64_t>>& edges) {
  verts_ = vertices;
  for (const auto& [u, v, mu] : edges) {
    verts_.push_back(u);
    verts_.push_back(v);
  }
  for (int v : verts_) check_label(v);
  std::sort(verts_.begin(), verts_.end());
  verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
  for (const auto& [u, v, mu] : edges) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (mu <= 0) throw std::invalid_argument("multiplicity must be positive");
    mult_[canonical(u, v)] += mu;
  }
}

std::int64_t Multigraph::multiplicity(int u, int v) const {
  if (u == v) return 0;
  auto it = mult_.find(canonical(u, v));
  return it == mult_.end() ? 0 : it->second;
}

std::int64_t Multigraph::degree(int v) const {
  std::int64_t d = 0;
  for (const auto& [e, mu] : mult_)
    if (e.first == v || e.second == v) d += mu;
  return d;
}

std::int64_t Multigraph::edge_count() const {
  std::int64_t m = 0;
  for (const auto& [e, mu] : mult_) m += mu;
  return m;
}

std::vector<int> Multigraph::simple_neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [e, mu] : mult_) {
    if (e.first == v) out.push_back(e.second);
    if (e.second == v) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexOrder::VertexOrder(std::vector<int> sequence) : seq_(std::move(sequence)) {
  pos_.reserve(seq_.size());
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    if (!pos_.emplace(seq_[i], i).second)
      throw std::invalid_argument("duplicate vertex " + std::to_string(seq_[i]) + " in order");
  }
}

std::optional<std::size_t> VertexOrder::position(int label) const {
  auto it = pos_.find(label);
  if (it == pos_.end()) return std::nullopt;
  return it->second;
}

bool VertexOrder::is_permutation_of(const Graph& g) const {
  if (seq_.size() != g.vertex_count()) return false;
  for (int v : seq_)
    if (!g.has_vertex(v)) return false;
  return true;
}

Graph parse_graph(std::istream& in) {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int line_no = 0;
  auto parse_label = [&](const std::string& tok) -> int {
    std::size_t pos = 0;
    long long value = 0;
    try {
      value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw parse_error("non-integer token '" + tok + "'", line_no);
    }
    if (pos != tok.size()) throw parse_error("non-integer token '" + tok + "'", line_no);
    if (value < 0) throw parse_error("negative label " + tok, line_no);
    return static_cast<int>(value);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind) || kind[0] == '#') continue;
    if (kind == "v") {
      std::string tok;
      if (!(ls >> tok)) throw parse_error("missing vertex label", line_no);
      vertices.push_back(parse_label(tok));
    } else if (kind == "e") {
      std::string a, b;
      if (!(ls >> a >> b)) throw parse_error("edge needs two endpoints", line_no);
      int u = parse_label(a), v = parse_label(b);
      if (u == v) throw parse_error("self-loop", line_no);
      edges.emplace_back(u, v);
    } else {
      throw parse_error("unknown directive '" + kind + "'", line_no);
    }
    std::string rest;
    if (ls >> rest) throw parse_error("trailing token '" + rest + "'", line_no);
  }
  return Graph(vertices, edges);
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

void serialize_graph(const Graph& g, std::ostream& out) {
  for (int v : g.vertices()) out << "v " << v << "\n";
  for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  serialize_graph(g, out);
  return out.str();
}

VertexSet parse_vertex_set(std::istream& in) {
  VertexSet out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    std::size_t pos = 0;
    long long value = 0;
    try {
      value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw parse_error("non-integer token '" + tok + "'", line_no);
    }
    if (pos != tok.size() || value < 0) throw parse_error("bad label '" + tok + "'", line_no);
    out.insert(static_cast<int>(value));
    std::string rest;
    if (ls >> rest) throw parse_error("trailing token '" + rest + "'", line_no);
  }
  return out;
}

VertexOrder parse_order(std::istream& in) {
  std::vector<int> seq;
  int v = 0;
  while (in >> v) {
    if (v < 0) throw std::invalid_argument("negative label in order");
    seq.push_back(v);
  }
  return VertexOrder(std::move(seq));
}

std::string serialize_order(const VertexOrder& order) {
  std::ostringstream out;
  bool first = true;
  for (int v : order.sequence()) {
    if (!first) out << ' ';
    out << v;
    first = false;
  }
  out << '\n';
  return out.str();
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  for (int v : s)
    if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v) + " in subset");
  std::vector<int> vertices(s.begin(), s.end());
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges())
    if (s.count(u) && s.count(v)) edges.emplace_back(u, v);
  return Graph(vertices, edges);
}

Graph complement(const Graph& g) {
  const auto& vs = g.vertices();
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j])) edges.emplace_back(vs[i], vs[j]);
  return Graph(vs, edges);
}

Graph underlying_simple(const Multigraph& m) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& [e, mu] : m.edge_multiplicities()) edges.push_back(e);
  return Graph(m.vertices(), edges);
}

}  // namespace degsq
