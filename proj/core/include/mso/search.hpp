#pragma once

// Exhaustive verification over small graph censuses: edge-addition scans,
// the edge-deletion lemma, the parallel-edge proposition and the tree
// construction. All decisions are exact rational comparisons.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mso/canonical.hpp"
#include "mso/exact.hpp"
#include "mso/graph.hpp"
#include "mso/profile_cache.hpp"
#include "mso/subtree.hpp"

namespace mso {

std::string_view tool_version();

struct PairResult {
  Vertex u = 0;
  Vertex v = 0;
  Rational new_mean;
  /// new_mean - base_mean.
  Rational delta;
};

struct EdgeScanResult {
  CanonicalForm form;
  std::string graph6;
  Rational base_mean;
  std::vector<PairResult> per_pair;
  /// Minimum delta; empty when g is complete.
  std::optional<Rational> worst_delta;
  bool any_increase = false;
  bool any_decrease = false;
};

/// Adds every non-edge of a connected simple graph in lexicographic order and
/// records the exact change in mean subtree order. `cache` may be null.
EdgeScanResult scan_edge_additions(const MultiGraph& g, ProfileCache* cache = nullptr,
                                   const EngineLimits& limits = {});

enum class SearchMode { Conjecture1, Conjecture2, Lemma4, Proposition, TreeTheorem };

std::string_view to_string(SearchMode mode);
/// Accepts conjecture1, conjecture2, lemma4, proposition, tree-theorem.
SearchMode parse_search_mode(std::string_view text);

struct SearchOptions {
  std::size_t workers = 1;
  /// Shared across calls when set; otherwise each search uses its own.
  ProfileCache* cache = nullptr;
  EngineLimits limits;
};

struct SearchReport {
  SearchMode mode = SearchMode::Conjecture1;
  std::size_t order = 0;
  std::size_t graphs_scanned = 0;
  /// Graphs for which the checked statement fails. For conjecture1 these are
  /// graphs with at least one decreasing non-edge.
  std::size_t counterexample_count = 0;
  /// conjecture1/2 only: total decreasing (graph, non-edge) pairs.
  std::size_t decreasing_pairs = 0;
  /// conjecture1/2 only: largest mu(G) - mu(G + uv) over all scanned pairs, 0 if none decrease.
  Rational max_decrease;
  std::string max_decrease_witness;
  bool conjecture2_holds = true;
  /// graph6 of every failing graph, sorted.
  std::vector<std::string> witnesses;
  /// conjecture1/2 only: graph6 of non-complete graphs with no increasing non-edge.
  std::vector<std::string> conjecture2_violations;
  long long elapsed_ms = 0;
  std::string tool_version;

  /// Equality ignoring elapsed_ms.
  bool same_result(const SearchReport& other) const;
};

/// Orders 3..8.
SearchReport find_conjecture1_counterexamples(std::size_t n, const SearchOptions& options = {});
/// Orders 2..8.
SearchReport verify_conjecture2(std::size_t n, const SearchOptions& options = {});
/// Orders 2..8 over connected graphs.
SearchReport verify_edge_deletion_lemma_census(std::size_t n, const SearchOptions& options = {});
/// Orders 2..8 over connected graphs.
SearchReport verify_parallel_edge_proposition_census(std::size_t n, const SearchOptions& options = {});
/// Orders 3..10 over all trees.
SearchReport verify_tree_theorem_census(std::size_t n, const SearchOptions& options = {});
SearchReport run_search(SearchMode mode, std::size_t n, const SearchOptions& options = {});

struct EdgeDeletionWitness {
  Edge edge;
  Rational local_mean;   // mu(G, e)
  Rational mean;         // mu(G)
  Rational reduced_mean; // mu(G - e)
};

/// First edge copy, in (u, v, copy) order, with mu(G,e) > mu(G) > mu(G-e).
/// Throws LemmaViolation if none exists and Precondition if g has no edge.
EdgeDeletionWitness verify_edge_deletion_lemma(const MultiGraph& g, ProfileCache* cache = nullptr,
                                               const EngineLimits& limits = {});

struct ParallelEdgeResult {
  /// The duplicated edge; for an edgeless g this is the new edge {0, 1}.
  Edge edge;
  MultiGraph augmented;
  Rational old_mean;
  Rational new_mean;
};

/// Adds a copy of a lemma witness edge (or joins 0 and 1 when g is edgeless)
/// and checks mu rises, S_{H,f} = S_{G,e}, and the weighted-average identity.
/// Throws Size for n < 2 and TheoremViolation if any check fails.
ParallelEdgeResult verify_parallel_edge_proposition(const MultiGraph& g, const EngineLimits& limits = {});

struct TreeConstruction {
  Vertex u = 0;
  Vertex v = 0;
  Vertex w = 0;
  /// Orders of the two pendant paths through v and w.
  std::size_t p = 0;
  std::size_t q = 0;
  MultiGraph augmented;
  /// The new edge vw in `augmented`.
  Edge edge;
};

/// Smallest u with two pendant paths hanging off it; among those paths the two
/// with the smallest leaf indices. Throws Size for n < 3, NotATree, and
/// TheoremViolation if no such u exists.
TreeConstruction tree_construction_edge(const MultiGraph& t);

struct TreeTheoremCheck {
  TreeConstruction construction;
  Rational tree_mean;       // mu(T)
  Rational augmented_mean;  // mu(H)
  Rational edge_local_mean; // mu(H, e)
  Rational vertex_local_mean; // mu(T, u)
};

/// Runs tree_construction_edge and checks mu(H) > mu(T), mu(H,e) > mu(T,u) and
/// both coefficientwise factorizations through S_{R,u}. Throws
/// TheoremViolation on any failure.
TreeTheoremCheck verify_tree_theorem(const MultiGraph& t);

/// JSON with "num/den" rationals; witnesses also go to a sibling file
/// (extension replaced by .g6), one sorted graph6 per line.
void persist_report(const SearchReport& report, const std::string& path);
SearchReport load_report(const std::string& path);
std::string report_to_json(const SearchReport& report);
SearchReport report_from_json(std::string_view text);
std::string witness_file_path(const std::string& report_path);

}  // namespace mso
