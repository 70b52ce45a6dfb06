#include "mso/graph.hpp"

#include <algorithm>
#include <numeric>

#include "mso/error.hpp"

namespace mso {
namespace {

void check_vertex(const MultiGraph& g, Vertex v) {
  if (v >= g.order()) {
    throw Error(ErrorKind::OutOfBounds,
                "vertex " + std::to_string(v) + " outside 0.." + std::to_string(g.order()));
  }
}

void require_simple(const MultiGraph& g, const char* what) {
  if (!g.is_simple()) throw Error(ErrorKind::Unsupported, std::string(what) + " needs a simple graph");
}

}  // namespace

MultiGraph::MultiGraph(std::size_t n) : n_(n), mult_(n * n, 0) {}

MultiGraph::MultiGraph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : MultiGraph(n) {
  for (const auto& [u, v] : edges) increment(u, v);
}

std::size_t MultiGraph::size() const {
  std::size_t m = 0;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) m += mult(u, v);
  }
  return m;
}

std::size_t MultiGraph::degree(Vertex v) const {
  std::size_t d = 0;
  for (Vertex w = 0; w < n_; ++w) d += mult(v, w);
  return d;
}

bool MultiGraph::is_simple() const {
  return std::all_of(mult_.begin(), mult_.end(), [](std::uint32_t m) { return m <= 1; });
}

std::uint64_t MultiGraph::neighbor_mask(Vertex v) const {
  std::uint64_t mask = 0;
  for (Vertex w = 0; w < n_; ++w) {
    if (mult(v, w) != 0) mask |= std::uint64_t{1} << w;
  }
  return mask;
}

std::vector<Edge> MultiGraph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      for (std::uint32_t c = 0; c < mult(u, v); ++c) out.push_back({u, v, c});
    }
  }
  return out;
}

void MultiGraph::increment(Vertex u, Vertex v, std::uint32_t by) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw Error(ErrorKind::LoopForbidden, "loop at vertex " + std::to_string(u));
  mult_[u * n_ + v] += by;
  mult_[v * n_ + u] += by;
}

void MultiGraph::decrement(Vertex u, Vertex v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v || mult(u, v) == 0) {
    throw Error(ErrorKind::MissingEdge,
                "no edge between " + std::to_string(u) + " and " + std::to_string(v));
  }
  --mult_[u * n_ + v];
  --mult_[v * n_ + u];
}

MultiGraph add_edge(const MultiGraph& g, Vertex u, Vertex v) {
  MultiGraph h = g;
  h.increment(u, v);
  return h;
}

MultiGraph delete_edge(const MultiGraph& g, const Edge& e) {
  check_vertex(g, e.u);
  check_vertex(g, e.v);
  if (e.u == e.v || e.copy >= g.mult(e.u, e.v)) {
    throw Error(ErrorKind::MissingEdge, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                            "} copy " + std::to_string(e.copy) + " absent");
  }
  MultiGraph h = g;
  h.decrement(e.u, e.v);
  return h;
}

MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<Vertex>& s) {
  if (s.empty()) throw Error(ErrorKind::EmptySet, "induced subgraph on an empty vertex set");
  for (Vertex v : s) check_vertex(g, v);
  MultiGraph h(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j]) throw Error(ErrorKind::Domain, "repeated vertex in induced subgraph set");
      if (const auto m = g.mult(s[i], s[j]); m != 0) h.increment(i, j, m);
    }
  }
  return h;
}

MultiGraph contract_edge(const MultiGraph& g, const Edge& e) {
  check_vertex(g, e.u);
  check_vertex(g, e.v);
  if (e.u == e.v || e.copy >= g.mult(e.u, e.v)) throw Error(ErrorKind::MissingEdge, "contracting an absent edge");
  const Vertex keep = std::min(e.u, e.v);
  const Vertex drop = std::max(e.u, e.v);
  const auto image = [&](Vertex x) { return x == drop ? keep : (x > drop ? x - 1 : x); };
  MultiGraph h(g.order() - 1);
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = a + 1; b < g.order(); ++b) {
      const auto m = g.mult(a, b);
      if (m == 0) continue;
      const Vertex ia = image(a);
      const Vertex ib = image(b);
      if (ia != ib) h.increment(ia, ib, m);
    }
  }
  return h;
}

bool is_connected(const MultiGraph& g) {
  const std::size_t n = g.order();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w = 0; w < n; ++w) {
      if (!seen[w] && g.adjacent(v, w)) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_tree(const MultiGraph& g) {
  return g.order() >= 1 && g.is_simple() && g.size() + 1 == g.order() && is_connected(g);
}

std::vector<std::pair<Vertex, Vertex>> non_edges(const MultiGraph& g) {
  require_simple(g, "non_edges");
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

MultiGraph relabel(const MultiGraph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.order()) throw Error(ErrorKind::Domain, "permutation size mismatch");
  MultiGraph h(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (const auto m = g.mult(u, v); m != 0) h.increment(perm[u], perm[v], m);
    }
  }
  return h;
}

}  // namespace mso
