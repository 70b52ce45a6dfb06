#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "mso/graph.hpp"

namespace mso {

inline constexpr std::size_t kMaxCanonicalOrder = 10;
inline constexpr std::size_t kMaxEnumerationOrder = 8;

/// Labeling-invariant key for a simple graph on at most 10 vertices.
///
/// `bits` packs the upper triangle of the canonically relabeled adjacency
/// matrix column by column ((0,1), (0,2), (1,2), (0,3), ...), the first pair in
/// the most significant position. The canonical labeling is the one that
/// maximizes this integer.
struct CanonicalForm {
  std::size_t n = 0;
  std::uint64_t bits = 0;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept {
    return std::hash<std::uint64_t>{}(f.bits * 0x9E3779B97F4A7C15ULL ^ f.n);
  }
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// perm[v] = canonical position of vertex v.
  std::vector<Vertex> perm;
};

/// Throws Unsupported for multigraphs and Size for n > 10.
CanonicalLabeling canonical_labeling(const MultiGraph& g);
CanonicalForm canonical_form(const MultiGraph& g);
/// The canonical representative encoded by `form`.
MultiGraph from_canonical(const CanonicalForm& form);
bool are_isomorphic(const MultiGraph& a, const MultiGraph& b);

/// One representative per isomorphism class of connected simple graphs on n
/// vertices, 1 <= n <= 8, sorted by canonical form. Each representative is in
/// canonical labeling.
std::vector<MultiGraph> enumerate_connected_graphs(std::size_t n);

/// Free trees on n vertices, 1 <= n <= 10, same conventions.
std::vector<MultiGraph> enumerate_trees(std::size_t n);

}  // namespace mso
