#pragma once

// Named graph families and exact closed forms for their subtree statistics.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "mso/exact.hpp"
#include "mso/graph.hpp"

namespace mso {

MultiGraph make_path(std::size_t n);
/// Throws Size for n < 3.
MultiGraph make_cycle(std::size_t n);
MultiGraph make_complete(std::size_t n);
/// Parts {0..m-1} and {m..m+n-1}.
MultiGraph make_complete_bipartite(std::size_t m, std::size_t n);
MultiGraph make_star(std::size_t leaves);
/// K_{2,n-2} plus the edge 0-1 joining the two-vertex side. n >= 4.
MultiGraph make_h_n(std::size_t n);

/// Order-7 graph whose a-b edge addition lowers the mean subtree order.
/// Labels: a=0, b=1, c=2, d=3, e=4, f=5, g=6.
MultiGraph make_edge_addition_counterexample();

/// Double broom parameters: a path of order n - 2s with s leaves hung on each end.
struct BroomSpec {
  std::size_t n = 0;
  std::size_t s = 0;

  /// Throws InvalidSpec unless 2s <= n - 3.
  void validate() const;
  std::size_t path_order() const { return n - 2 * s; }
};

/// Path 0..L-1 (L = n - 2s) with u = 0, v = L-1; leaves L..L+s-1 hang on u and
/// L+s..n-1 on v.
MultiGraph make_t_n(const BroomSpec& spec);
/// T_n plus the edge uv, returned with that edge.
std::pair<MultiGraph, Edge> make_g_n(const BroomSpec& spec);

/// ceil(2 log2 n), i.e. the least s with 2^s >= n^2, by integer arithmetic.
/// Throws Domain for n < 32.
std::size_t default_s_sequence(std::size_t n);

struct ClosedForm {
  BigInt total;
  BigInt weight;
  Rational mean;
};

/// Local statistics of a cycle at an edge: (C(n,2), n(n-1)(2n+2)/6, (2n+2)/3).
ClosedForm cycle_edge_closed_form(std::size_t n);
/// x^2 * sum_{i=0}^{n-2} (i+1) x^i.
IntPolynomial cycle_edge_polynomial(std::size_t n);
/// (1+x)^{2s} * S_{C_{n-2s},e}(x).
IntPolynomial gn_edge_polynomial(const BroomSpec& spec);
/// (2n - s + 2) / 3.
Rational gn_edge_mean_closed_form(const BroomSpec& spec);
/// 2s + C(n-2s-1, 2) + 2(n-2s-1) 2^s + 2^{2s}.
BigInt tn_count_closed_form(const BroomSpec& spec);

/// Parses the CLI family grammar: path:N, cycle:N, complete:N, kbip:M:N,
/// star:K, hn:N, broom:N:S (T_n), gn:N:S (G_n), fig1.
MultiGraph parse_family_spec(std::string_view spec);

}  // namespace mso
