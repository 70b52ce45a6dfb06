#pragma once

// Subtree polynomials and the means derived from them.
//
// General multigraphs go through induced-subset enumeration: the number of
// subtrees with vertex set S equals the number of spanning trees of G[S], which
// the Matrix-Tree theorem gives as a Laplacian minor. Trees have a rooted DP
// that scales to thousands of vertices.

#include <cstddef>
#include <variant>

#include "mso/exact.hpp"
#include "mso/graph.hpp"

namespace mso {

struct EngineLimits {
  /// Largest order accepted by the subset-enumeration engine.
  std::size_t max_general_order = 20;
};

struct SubtreeProfile {
  std::size_t order = 0;
  IntPolynomial poly;
  BigInt total;
  BigInt weight;
  Rational mean;
  Rational density;
  BigInt spanning_count;
  Rational spanning_proportion;
};

using Anchor = std::variant<Vertex, Edge>;

struct LocalProfile {
  Anchor anchor;
  IntPolynomial poly;
  Rational mean;
  Rational density;
};

/// Builds the derived fields from a global subtree polynomial of an order-n graph.
SubtreeProfile make_profile(IntPolynomial poly, std::size_t n);
LocalProfile make_local_profile(Anchor anchor, IntPolynomial poly, std::size_t n);

/// Kirchhoff count with parallel edges distinguished; 1 for n == 1, 0 iff
/// disconnected.
BigInt spanning_tree_count(const MultiGraph& g);

SubtreeProfile subtree_polynomial(const MultiGraph& g, const EngineLimits& limits = {});
LocalProfile local_polynomial_vertex(const MultiGraph& g, Vertex v, const EngineLimits& limits = {});
/// S_G - S_{G-e}.
LocalProfile local_polynomial_edge(const MultiGraph& g, const Edge& e, const EngineLimits& limits = {});
/// Independent route for S_{G,e}: sums spanning-tree counts of G[S]/e over
/// connected S containing both ends of e.
IntPolynomial local_edge_polynomial_by_contraction(const MultiGraph& g, const Edge& e,
                                                   const EngineLimits& limits = {});

/// Throws NotATree unless t is a simple connected acyclic graph.
SubtreeProfile tree_subtree_polynomial(const MultiGraph& t);
LocalProfile tree_local_polynomial_vertex(const MultiGraph& t, Vertex v);
/// Subtree count and order-weighted count of a tree, without building
/// polynomials. Same results as tree_subtree_polynomial's total/weight.
std::pair<BigInt, BigInt> tree_subtree_totals(const MultiGraph& t);

/// Subtrees of order at least 2: S_G - n x. Throws UndefinedMean when g has no edge.
IntPolynomial star_polynomial(const MultiGraph& g, const EngineLimits& limits = {});
Rational mu_star(const MultiGraph& g, const EngineLimits& limits = {});

}  // namespace mso
