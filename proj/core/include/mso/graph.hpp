#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mso {

using Vertex = std::size_t;

/// One copy of a (possibly parallel) edge. `copy` distinguishes parallel edges.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  std::uint32_t copy = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Loopless multigraph on vertices 0..n-1, stored as a symmetric multiplicity
/// matrix. Equality is label-sensitive.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::size_t n);
  /// Builds from an edge list; repeated pairs add multiplicity.
  MultiGraph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t order() const { return n_; }
  std::uint32_t mult(Vertex u, Vertex v) const { return mult_[u * n_ + v]; }
  bool adjacent(Vertex u, Vertex v) const { return mult(u, v) != 0; }
  /// Total edge count, parallel copies included.
  std::size_t size() const;
  std::size_t degree(Vertex v) const;
  bool is_simple() const;
  /// Neighbour bitmask; only valid for n <= 64.
  std::uint64_t neighbor_mask(Vertex v) const;

  /// All edge copies ordered by (u, v, copy).
  std::vector<Edge> edges() const;

  /// In-place mutation used by constructors; the free functions below are the
  /// pure API.
  void increment(Vertex u, Vertex v, std::uint32_t by = 1);
  void decrement(Vertex u, Vertex v);

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> mult_;
};

MultiGraph add_edge(const MultiGraph& g, Vertex u, Vertex v);
MultiGraph delete_edge(const MultiGraph& g, const Edge& e);
/// Relabels s[i] -> i.
MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<Vertex>& s);
/// Merges e.v into e.u; the remaining copies of {u, v} would be loops and are
/// dropped. Vertices above e.v shift down by one.
MultiGraph contract_edge(const MultiGraph& g, const Edge& e);
bool is_connected(const MultiGraph& g);
bool is_tree(const MultiGraph& g);
/// Pairs u < v with mult 0, lexicographic. Simple graphs only.
std::vector<std::pair<Vertex, Vertex>> non_edges(const MultiGraph& g);
MultiGraph relabel(const MultiGraph& g, const std::vector<Vertex>& perm);

// graph6 (simple graphs, n <= 62).
MultiGraph parse_graph6(std::string_view text);
std::string to_graph6(const MultiGraph& g);

// {"n": int, "edges": [[u, v, multiplicity], ...]} with u < v.
MultiGraph parse_multigraph_json(std::string_view text);
std::string to_multigraph_json(const MultiGraph& g);

}  // namespace mso
