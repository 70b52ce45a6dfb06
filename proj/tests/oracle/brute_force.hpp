#pragma once

// Test-only oracles. Nothing here calls into the engine paths it is used to
// check: subtrees are found by enumerating edge subsets, isomorphism classes by
// trying every permutation, and census sizes by Burnside's lemma.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "mso/graph.hpp"

namespace oracle {

struct EdgeCopy {
  std::size_t u;
  std::size_t v;
  std::uint32_t copy;
};

inline std::vector<EdgeCopy> edge_copies(const mso::MultiGraph& g) {
  std::vector<EdgeCopy> out;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      for (std::uint32_t c = 0; c < g.mult(u, v); ++c) out.push_back({u, v, c});
    }
  }
  return out;
}

/// Subtree counts by order, optionally restricted to subtrees containing a
/// vertex or a specific edge copy. Index k of the result counts subtrees with
/// k vertices.
struct SubtreeFilter {
  long vertex = -1;
  long edge_index = -1;  // index into edge_copies(g)
};

inline std::vector<mpz_class> subtree_counts(const mso::MultiGraph& g, SubtreeFilter filter = {}) {
  const auto edges = edge_copies(g);
  const std::size_t n = g.order();
  std::vector<mpz_class> counts(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (filter.edge_index >= 0) break;
    if (filter.vertex >= 0 && static_cast<std::size_t>(filter.vertex) != v) continue;
    counts[1] += 1;
  }
  const std::uint64_t limit = std::uint64_t{1} << edges.size();
  std::vector<std::size_t> parent(n);
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    if (filter.edge_index >= 0 && !((mask >> filter.edge_index) & 1u)) continue;
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool acyclic = true;
    std::size_t used_edges = 0;
    std::vector<char> touched(n, 0);
    for (std::size_t i = 0; i < edges.size() && acyclic; ++i) {
      if (!((mask >> i) & 1u)) continue;
      ++used_edges;
      touched[edges[i].u] = touched[edges[i].v] = 1;
      const auto a = find(edges[i].u);
      const auto b = find(edges[i].v);
      if (a == b) acyclic = false;
      else parent[a] = b;
    }
    if (!acyclic) continue;
    const auto verts = static_cast<std::size_t>(std::count(touched.begin(), touched.end(), 1));
    // An acyclic edge set is a single tree iff |E| = |V| - 1 on its vertices.
    if (used_edges + 1 != verts) continue;
    if (filter.vertex >= 0 && !touched[static_cast<std::size_t>(filter.vertex)]) continue;
    counts[verts] += 1;
  }
  return counts;
}

inline mpz_class spanning_trees(const mso::MultiGraph& g) {
  if (g.order() == 1) return 1;
  return subtree_counts(g)[g.order()];
}

/// Strips trailing zeros so results compare against IntPolynomial::coeffs().
inline std::vector<mpz_class> trimmed(std::vector<mpz_class> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

inline bool connected_by_dfs(std::size_t n, const std::vector<std::vector<char>>& adj) {
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      if (adj[v][w] && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

/// Smallest edge-bit string over all n! relabelings; n <= 7.
inline std::uint64_t min_over_permutations(std::size_t n, const std::vector<std::vector<char>>& adj) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | (adj[perm[i]][perm[j]] ? 1u : 0u);
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Isomorphism classes of connected graphs on n vertices by exhaustive
/// permutation dedup over all 2^C(n,2) edge sets.
inline std::size_t connected_classes_brute_force(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::set<std::uint64_t> classes;
  std::vector<std::pair<std::size_t, std::size_t>> index;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) index.emplace_back(i, j);
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (std::size_t k = 0; k < pairs; ++k) {
      if ((mask >> k) & 1u) adj[index[k].first][index[k].second] = adj[index[k].second][index[k].first] = 1;
    }
    if (!connected_by_dfs(n, adj)) continue;
    classes.insert(min_over_permutations(n, adj));
  }
  return classes.size();
}

/// Number of unlabeled graphs on n vertices by Burnside: average over S_n of
/// 2^(number of orbits on vertex pairs).
inline mpz_class all_graphs_burnside(std::size_t n) {
  if (n <= 1) return 1;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpz_class sum = 0;
  mpz_class group_order = 0;
  do {
    std::map<std::pair<std::size_t, std::size_t>, char> seen;
    std::size_t orbits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (seen.count({i, j})) continue;
        ++orbits;
        std::size_t a = i;
        std::size_t b = j;
        while (!seen.count({std::min(a, b), std::max(a, b)})) {
          seen[{std::min(a, b), std::max(a, b)}] = 1;
          a = perm[a];
          b = perm[b];
        }
      }
    }
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), 2, orbits);
    sum += term;
    group_order += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / group_order;
}

/// Connected counts c_1..c_max from all-graph counts via the inverse Euler
/// transform (a graph is a multiset of connected components).
inline std::vector<mpz_class> connected_counts_burnside(std::size_t max_n) {
  std::vector<mpz_class> a(max_n + 1);
  for (std::size_t n = 1; n <= max_n; ++n) a[n] = all_graphs_burnside(n);
  // b_n = c_n by the Euler transform; invert with the standard recurrence
  // n a_n = sum_{k=1}^n d_k a_{n-k}, d_k = sum_{j | k} j c_j, a_0 = 1.
  a[0] = 1;
  std::vector<mpz_class> d(max_n + 1, 0);
  std::vector<mpz_class> c(max_n + 1, 0);
  for (std::size_t n = 1; n <= max_n; ++n) {
    mpz_class acc = n * a[n];
    for (std::size_t k = 1; k < n; ++k) acc -= d[k] * a[n - k];
    d[n] = acc;
    mpz_class divisor_part = 0;
    for (std::size_t j = 1; j < n; ++j) {
      if (n % j == 0) divisor_part += j * c[j];
    }
    c[n] = (d[n] - divisor_part) / n;
  }
  return c;
}

/// Random simple graph with edge probability `p`, regenerated until connected
/// when `connected` is set.
inline mso::MultiGraph random_graph(std::size_t n, double p, std::mt19937_64& rng, bool connected = true) {
  std::bernoulli_distribution coin(p);
  while (true) {
    mso::MultiGraph g(n);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (coin(rng)) g.increment(u, v);
      }
    }
    if (!connected || mso::is_connected(g)) return g;
  }
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace oracle
