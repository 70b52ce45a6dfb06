#include "mso/subtree.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>

#include "mso/error.hpp"

namespace mso {
namespace {

using Mask = std::uint64_t;

void check_engine_bounds(const MultiGraph& g, const EngineLimits& limits) {
  if (g.order() == 0) throw Error(ErrorKind::Size, "subtree polynomial of the null graph");
  if (g.order() > limits.max_general_order || g.order() > 64) {
    throw Error(ErrorKind::Size, "general subtree engine is limited to " +
                                     std::to_string(limits.max_general_order) + " vertices (got " +
                                     std::to_string(g.order()) +
                                     "); use the tree DP or a closed form");
  }
}

// Fraction-free Gaussian elimination. Every division is exact, so the matrix
// stays integral and the last pivot is the determinant.
std::optional<std::int64_t> bareiss_checked(std::vector<std::int64_t> a, std::size_t m) {
  std::int64_t prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k * m + k] == 0) {
      std::size_t r = k + 1;
      while (r < m && a[r * m + k] == 0) ++r;
      if (r == m) return 0;
      for (std::size_t j = 0; j < m; ++j) std::swap(a[k * m + j], a[r * m + j]);
      sign = -sign;
    }
    const std::int64_t pivot = a[k * m + k];
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        std::int64_t x;
        std::int64_t y;
        std::int64_t d;
        if (__builtin_mul_overflow(a[i * m + j], pivot, &x) ||
            __builtin_mul_overflow(a[i * m + k], a[k * m + j], &y) || __builtin_sub_overflow(x, y, &d)) {
          return std::nullopt;
        }
        a[i * m + j] = d / prev;
      }
      a[i * m + k] = 0;
    }
    prev = pivot;
  }
  return m == 0 ? 1 : sign * a[(m - 1) * m + (m - 1)];
}

BigInt bareiss_big(const std::vector<std::int64_t>& src, std::size_t m) {
  std::vector<BigInt> a(src.begin(), src.end());
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k * m + k] == 0) {
      std::size_t r = k + 1;
      while (r < m && a[r * m + k] == 0) ++r;
      if (r == m) return 0;
      for (std::size_t j = 0; j < m; ++j) std::swap(a[k * m + j], a[r * m + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        BigInt t = a[i * m + j] * a[k * m + k] - a[i * m + k] * a[k * m + j];
        mpz_divexact(a[i * m + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * m + k] = 0;
    }
    prev = a[k * m + k];
  }
  if (m == 0) return 1;
  return sign * a[(m - 1) * m + (m - 1)];
}

BigInt determinant(const std::vector<std::int64_t>& a, std::size_t m) {
  if (auto small = bareiss_checked(a, m)) return BigInt(static_cast<long>(*small));
  return bareiss_big(a, m);
}

// Laplacian of g restricted to `verts`, with the last vertex's row and column
// removed.
std::vector<std::int64_t> reduced_laplacian(const MultiGraph& g, const std::vector<Vertex>& verts) {
  const std::size_t m = verts.size() - 1;
  std::vector<std::int64_t> lap(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t deg = 0;
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (i == j) continue;
      const auto w = static_cast<std::int64_t>(g.mult(verts[i], verts[j]));
      deg += w;
      if (j < m) lap[i * m + j] = -w;
    }
    lap[i * m + i] = deg;
  }
  return lap;
}

BigInt spanning_count_on(const MultiGraph& g, const std::vector<Vertex>& verts) {
  if (verts.size() <= 1) return 1;
  return determinant(reduced_laplacian(g, verts), verts.size() - 1);
}

std::vector<Vertex> vertices_of(Mask s) {
  std::vector<Vertex> out;
  while (s) {
    out.push_back(static_cast<Vertex>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

// Visits every vertex set inducing a connected subgraph exactly once. Each set
// is grown from its smallest vertex; a candidate is either taken or excluded
// for the rest of that branch.
template <typename Visit>
class ConnectedSets {
 public:
  ConnectedSets(const MultiGraph& g, Visit& visit) : visit_(visit) {
    for (Vertex v = 0; v < g.order(); ++v) nbr_.push_back(g.neighbor_mask(v));
  }

  void run() {
    for (Vertex v = 0; v < nbr_.size(); ++v) {
      const Mask below = (Mask{1} << v) - 1;
      const Mask self = Mask{1} << v;
      grow(self, nbr_[v] & ~below & ~self, below);
    }
  }

 private:
  void grow(Mask set, Mask frontier, Mask excluded) {
    visit_(set);
    while (frontier) {
      const Mask w = frontier & (~frontier + 1);
      frontier &= ~w;
      const Vertex wi = static_cast<Vertex>(std::countr_zero(w));
      const Mask grown = set | w;
      grow(grown, (frontier | nbr_[wi]) & ~grown & ~excluded, excluded);
      excluded |= w;
    }
  }

  Visit& visit_;
  std::vector<Mask> nbr_;
};

template <typename Visit>
void for_each_connected_set(const MultiGraph& g, Visit visit) {
  ConnectedSets<Visit>(g, visit).run();
}

IntPolynomial subset_sum(const MultiGraph& g, Mask required) {
  std::vector<BigInt> coeffs(g.order() + 1);
  for_each_connected_set(g, [&](Mask s) {
    if ((s & required) != required) return;
    coeffs[static_cast<std::size_t>(std::popcount(s))] += spanning_count_on(g, vertices_of(s));
  });
  return IntPolynomial(std::move(coeffs));
}

void require_tree(const MultiGraph& t) {
  if (!is_tree(t)) throw Error(ErrorKind::NotATree, "input is not a simple connected acyclic graph");
}

// BFS order from root plus parent links; children follow their parent.
std::pair<std::vector<Vertex>, std::vector<std::vector<Vertex>>> rooted_order(const MultiGraph& t, Vertex root) {
  const std::size_t n = t.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : t.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<Vertex> order{root};
  std::vector<std::vector<Vertex>> children(n);
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex v = order[head];
    for (Vertex w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      children[v].push_back(w);
      order.push_back(w);
    }
  }
  return {std::move(order), std::move(children)};
}

// Polynomial of subtrees whose vertex nearest the root is v, for every v.
std::vector<IntPolynomial> rooted_polynomials(const MultiGraph& t, Vertex root) {
  const auto [order, children] = rooted_order(t, root);
  std::vector<IntPolynomial> rooted(t.order());
  const IntPolynomial one{1};
  const IntPolynomial x = IntPolynomial::monomial(1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    IntPolynomial acc = x;
    for (Vertex c : children[*it]) acc *= one + rooted[c];
    rooted[*it] = std::move(acc);
  }
  return rooted;
}

}  // namespace

SubtreeProfile make_profile(IntPolynomial poly, std::size_t n) {
  SubtreeProfile p;
  p.order = n;
  p.total = eval_at_one(poly);
  p.weight = deriv_at_one(poly);
  p.mean = log_deriv_at_one(poly);
  p.density = p.mean / Rational(static_cast<long>(n));
  p.spanning_count = poly.coeff(n);
  p.spanning_proportion = Rational(p.spanning_count, p.total);
  p.poly = std::move(poly);
  return p;
}

LocalProfile make_local_profile(Anchor anchor, IntPolynomial poly, std::size_t n) {
  LocalProfile p;
  p.anchor = anchor;
  p.mean = log_deriv_at_one(poly);
  p.density = p.mean / Rational(static_cast<long>(n));
  p.poly = std::move(poly);
  return p;
}

BigInt spanning_tree_count(const MultiGraph& g) {
  if (g.order() == 0) throw Error(ErrorKind::Size, "spanning trees of the null graph");
  std::vector<Vertex> all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  return spanning_count_on(g, all);
}

SubtreeProfile subtree_polynomial(const MultiGraph& g, const EngineLimits& limits) {
  check_engine_bounds(g, limits);
  return make_profile(subset_sum(g, 0), g.order());
}

LocalProfile local_polynomial_vertex(const MultiGraph& g, Vertex v, const EngineLimits& limits) {
  check_engine_bounds(g, limits);
  if (v >= g.order()) throw Error(ErrorKind::OutOfBounds, "anchor vertex out of range");
  return make_local_profile(v, subset_sum(g, Mask{1} << v), g.order());
}

LocalProfile local_polynomial_edge(const MultiGraph& g, const Edge& e, const EngineLimits& limits) {
  check_engine_bounds(g, limits);
  const MultiGraph without = delete_edge(g, e);
  IntPolynomial poly = subset_sum(g, 0) - subset_sum(without, 0);
  return make_local_profile(e, std::move(poly), g.order());
}

IntPolynomial local_edge_polynomial_by_contraction(const MultiGraph& g, const Edge& e, const EngineLimits& limits) {
  check_engine_bounds(g, limits);
  if (e.u >= g.order() || e.v >= g.order() || e.u == e.v || e.copy >= g.mult(e.u, e.v)) {
    throw Error(ErrorKind::MissingEdge, "anchor edge absent");
  }
  const Mask ends = (Mask{1} << e.u) | (Mask{1} << e.v);
  std::vector<BigInt> coeffs(g.order() + 1);
  for_each_connected_set(g, [&](Mask s) {
    if ((s & ends) != ends) return;
    const std::vector<Vertex> verts = vertices_of(s);
    const MultiGraph sub = induced_subgraph(g, verts);
    Vertex iu = 0;
    Vertex iv = 0;
    for (Vertex i = 0; i < verts.size(); ++i) {
      if (verts[i] == e.u) iu = i;
      if (verts[i] == e.v) iv = i;
    }
    coeffs[verts.size()] += spanning_tree_count(contract_edge(sub, {std::min(iu, iv), std::max(iu, iv), 0}));
  });
  return IntPolynomial(std::move(coeffs));
}

SubtreeProfile tree_subtree_polynomial(const MultiGraph& t) {
  require_tree(t);
  IntPolynomial total;
  for (auto& p : rooted_polynomials(t, 0)) total += p;
  return make_profile(std::move(total), t.order());
}

LocalProfile tree_local_polynomial_vertex(const MultiGraph& t, Vertex v) {
  require_tree(t);
  if (v >= t.order()) throw Error(ErrorKind::OutOfBounds, "anchor vertex out of range");
  auto rooted = rooted_polynomials(t, v);
  return make_local_profile(v, std::move(rooted[v]), t.order());
}

std::pair<BigInt, BigInt> tree_subtree_totals(const MultiGraph& t) {
  require_tree(t);
  const auto [order, children] = rooted_order(t, 0);
  // count[v] = R_v(1), weight[v] = R_v'(1) for R_v = x * prod(1 + R_c).
  std::vector<BigInt> count(t.order());
  std::vector<BigInt> weight(t.order());
  BigInt total = 0;
  BigInt total_weight = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    BigInt c = 1;
    for (Vertex ch : children[v]) c *= 1 + count[ch];
    BigInt w = c;
    for (Vertex ch : children[v]) {
      BigInt share;
      const BigInt factor = 1 + count[ch];
      mpz_divexact(share.get_mpz_t(), c.get_mpz_t(), factor.get_mpz_t());
      w += weight[ch] * share;
    }
    total += c;
    total_weight += w;
    count[v] = std::move(c);
    weight[v] = std::move(w);
  }
  return {total, total_weight};
}

IntPolynomial star_polynomial(const MultiGraph& g, const EngineLimits& limits) {
  if (g.size() == 0) throw Error(ErrorKind::UndefinedMean, "graph has no subtree of order 2");
  IntPolynomial s = subtree_polynomial(g, limits).poly;
  return s - IntPolynomial::monomial(1, static_cast<long>(g.order()));
}

Rational mu_star(const MultiGraph& g, const EngineLimits& limits) {
  return log_deriv_at_one(star_polynomial(g, limits));
}

}  // namespace mso
