#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace degsq {

using VertexSet = std::set<int>;

struct parse_error : std::runtime_error {
  int line;
  parse_error(const std::string& what, int line_no)
      : std::runtime_error(what + " at line " + std::to_string(line_no)), line(line_no) {}
};

// Simple undirected graph over arbitrary non-negative integer labels.
// Immutable after construction; transforms return new graphs.
class Graph {
 public:
  Graph() = default;

  // Endpoints of edges are added to the vertex set automatically.
  // Duplicate edges collapse; self-loops are rejected.
  Graph(const std::vector<int>& vertices, const std::vector<std::pair<int, int>>& edges);

  const std::vector<int>& vertices() const { return verts_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }  // u<v, sorted
  std::size_t vertex_count() const { return verts_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(int v) const { return index_.count(v) != 0; }
  bool has_edge(int u, int v) const;
  std::span<const int> neighbors(int v) const;  // sorted labels; throws on unknown label
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;
  int max_label() const { return verts_.empty() ? -1 : verts_.back(); }

  int index_of(int label) const;  // dense index in vertices() order, -1 if absent
  int label_at(std::size_t idx) const { return verts_[idx]; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.verts_ == b.verts_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<int> verts_;                    // sorted unique
  std::vector<std::pair<int, int>> edges_;    // canonical
  std::vector<std::vector<int>> adj_;         // by dense index, sorted labels
  std::unordered_map<int, int> index_;
};

// Undirected multigraph: unordered pairs with positive multiplicities.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(const std::vector<int>& vertices,
             const std::vector<std::tuple<int, int, std::int64_t>>& edges);

  const std::vector<int>& vertices() const { return verts_; }
  std::int64_t multiplicity(int u, int v) const;
  std::int64_t degree(int v) const;       // sum of incident multiplicities
  std::int64_t edge_count() const;        // counted with multiplicity
  const std::map<std::pair<int, int>, std::int64_t>& edge_multiplicities() const { return mult_; }
  std::vector<int> simple_neighbors(int v) const;

 private:
  std::vector<int> verts_;
  std::map<std::pair<int, int>, std::int64_t> mult_;  // keys u<v
};

// A permutation of some vertex set, with O(1) position lookup.
class VertexOrder {
 public:
  VertexOrder() = default;
  explicit VertexOrder(std::vector<int> sequence);

  const std::vector<int>& sequence() const { return seq_; }
  std::size_t size() const { return seq_.size(); }
  std::optional<std::size_t> position(int label) const;
  bool is_permutation_of(const Graph& g) const;

 private:
  std::vector<int> seq_;
  std::unordered_map<int, std::size_t> pos_;
};

// Edge-list text format. Lines: `# comment`, `v <id>`, `e <u> <v>`.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);

// Canonical form: all `v` lines sorted, then all `e` lines with u<v sorted.
void serialize_graph(const Graph& g, std::ostream& out);
std::string serialize_graph(const Graph& g);

// One vertex label per line; `#` comments and blank lines are skipped.
VertexSet parse_vertex_set(std::istream& in);

// One line of space-separated labels.
VertexOrder parse_order(std::istream& in);
std::string serialize_order(const VertexOrder& order);

Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph complement(const Graph& g);
Graph underlying_simple(const Multigraph& m);

}  // namespace degsq
