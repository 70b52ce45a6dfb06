#include "mso/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "mso/error.hpp"
#include "mso/families.hpp"

#ifndef MSO_VERSION
#define MSO_VERSION "dev"
#endif

namespace mso {
namespace {

using Clock = std::chrono::steady_clock;

// Each worker owns the graphs at indices it claims; results land in their own
// slot, so merging is just reading the vector in census order.
template <typename Result, typename Fn>
std::vector<Result> run_census(const std::vector<MultiGraph>& graphs, std::size_t workers, Fn fn) {
  std::vector<Result> results(graphs.size());
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(graphs.size(), 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) results[i] = fn(graphs[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < graphs.size(); i = next++) results[i] = fn(graphs[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

std::shared_ptr<const SubtreeProfile> profile_of(const MultiGraph& g, ProfileCache* cache,
                                                 const EngineLimits& limits) {
  if (cache != nullptr && g.is_simple() && g.order() <= kMaxCanonicalOrder) return cache->profile(g, limits);
  return std::make_shared<const SubtreeProfile>(subtree_polynomial(g, limits));
}

void check_order(std::size_t n, std::size_t lo, std::size_t hi, std::string_view what) {
  if (n < lo || n > hi) {
    throw Error(ErrorKind::Size, std::string(what) + " supports orders " + std::to_string(lo) + ".." +
                                     std::to_string(hi) + ", got " + std::to_string(n));
  }
}

SearchReport start_report(SearchMode mode, std::size_t n) {
  SearchReport r;
  r.mode = mode;
  r.order = n;
  r.tool_version = std::string(tool_version());
  return r;
}

void finish(SearchReport& r, Clock::time_point started) {
  std::sort(r.witnesses.begin(), r.witnesses.end());
  std::sort(r.conjecture2_violations.begin(), r.conjecture2_violations.end());
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started).count();
}

SearchReport scan_census(SearchMode mode, std::size_t n, const SearchOptions& options) {
  const auto started = Clock::now();
  ProfileCache local_cache;
  ProfileCache* cache = options.cache != nullptr ? options.cache : &local_cache;
  const auto graphs = enumerate_connected_graphs(n);
  const auto scans = run_census<EdgeScanResult>(graphs, options.workers, [&](const MultiGraph& g) {
    return scan_edge_additions(g, cache, options.limits);
  });

  SearchReport r = start_report(mode, n);
  r.graphs_scanned = scans.size();
  for (const auto& scan : scans) {
    for (const auto& pair : scan.per_pair) {
      if (pair.delta.sign() < 0) ++r.decreasing_pairs;
    }
    if (scan.any_decrease) {
      const Rational decrease = -*scan.worst_delta;
      if (decrease > r.max_decrease) {
        r.max_decrease = decrease;
        r.max_decrease_witness = scan.graph6;
      }
    }
    const bool complete = scan.per_pair.empty();
    if (!complete && !scan.any_increase) r.conjecture2_violations.push_back(scan.graph6);
    const bool fails = mode == SearchMode::Conjecture1 ? scan.any_decrease : (!complete && !scan.any_increase);
    if (fails) {
      ++r.counterexample_count;
      r.witnesses.push_back(scan.graph6);
    }
  }
  r.conjecture2_holds = r.conjecture2_violations.empty();
  finish(r, started);
  return r;
}

// Runs `check` on every graph; a thrown library error marks the graph as failing.
template <typename Check>
SearchReport check_census(SearchMode mode, std::size_t n, const std::vector<MultiGraph>& graphs,
                          const SearchOptions& options, Check check) {
  const auto started = Clock::now();
  const auto ok = run_census<char>(graphs, options.workers, [&](const MultiGraph& g) -> char {
    try {
      check(g);
      return 1;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::LemmaViolation || e.kind() == ErrorKind::TheoremViolation) return 0;
      throw;
    }
  });
  SearchReport r = start_report(mode, n);
  r.graphs_scanned = graphs.size();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!ok[i]) {
      ++r.counterexample_count;
      r.witnesses.push_back(to_graph6(graphs[i]));
    }
  }
  finish(r, started);
  return r;
}

void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) throw Error(kind, what);
}

// Walks from u into the component through `start`; returns the far leaf and
// the component order if that component together with u induces a path.
std::optional<std::pair<Vertex, std::size_t>> pendant_path(const MultiGraph& t, Vertex u, Vertex start) {
  Vertex prev = u;
  Vertex cur = start;
  std::size_t length = 1;
  while (true) {
    const std::size_t d = t.degree(cur);
    if (d == 1) return std::make_pair(cur, length);
    if (d != 2) return std::nullopt;
    Vertex next = cur;
    for (Vertex x = 0; x < t.order(); ++x) {
      if (x != prev && t.adjacent(cur, x)) next = x;
    }
    prev = cur;
    cur = next;
    ++length;
  }
}

}  // namespace

std::string_view tool_version() { return MSO_VERSION; }

std::string_view to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::Conjecture1: return "conjecture1";
    case SearchMode::Conjecture2: return "conjecture2";
    case SearchMode::Lemma4: return "lemma4";
    case SearchMode::Proposition: return "proposition";
    case SearchMode::TreeTheorem: return "tree-theorem";
  }
  return "unknown";
}

SearchMode parse_search_mode(std::string_view text) {
  for (auto mode : {SearchMode::Conjecture1, SearchMode::Conjecture2, SearchMode::Lemma4, SearchMode::Proposition,
                    SearchMode::TreeTheorem}) {
    if (text == to_string(mode)) return mode;
  }
  throw ParseError(0, "unknown search mode '" + std::string(text) + "'");
}

bool SearchReport::same_result(const SearchReport& o) const {
  return mode == o.mode && order == o.order && graphs_scanned == o.graphs_scanned &&
         counterexample_count == o.counterexample_count && decreasing_pairs == o.decreasing_pairs &&
         max_decrease == o.max_decrease && max_decrease_witness == o.max_decrease_witness &&
         conjecture2_holds == o.conjecture2_holds && witnesses == o.witnesses &&
         conjecture2_violations == o.conjecture2_violations && tool_version == o.tool_version;
}

EdgeScanResult scan_edge_additions(const MultiGraph& g, ProfileCache* cache, const EngineLimits& limits) {
  if (!g.is_simple()) throw Error(ErrorKind::Unsupported, "edge-addition scan needs a simple graph");
  if (!is_connected(g)) throw Error(ErrorKind::Precondition, "edge-addition scan needs a connected graph");

  EdgeScanResult out;
  if (g.order() <= kMaxCanonicalOrder) out.form = canonical_form(g);
  if (g.order() <= 62) out.graph6 = to_graph6(g);
  out.base_mean = profile_of(g, cache, limits)->mean;
  for (const auto& [u, v] : non_edges(g)) {
    PairResult pr;
    pr.u = u;
    pr.v = v;
    pr.new_mean = profile_of(add_edge(g, u, v), cache, limits)->mean;
    pr.delta = pr.new_mean - out.base_mean;
    if (pr.delta.sign() > 0) out.any_increase = true;
    if (pr.delta.sign() < 0) out.any_decrease = true;
    if (!out.worst_delta || pr.delta < *out.worst_delta) out.worst_delta = pr.delta;
    out.per_pair.push_back(std::move(pr));
  }
  return out;
}

SearchReport find_conjecture1_counterexamples(std::size_t n, const SearchOptions& options) {
  check_order(n, 3, kMaxEnumerationOrder, "conjecture1 search");
  return scan_census(SearchMode::Conjecture1, n, options);
}

SearchReport verify_conjecture2(std::size_t n, const SearchOptions& options) {
  check_order(n, 2, kMaxEnumerationOrder, "conjecture2 verification");
  return scan_census(SearchMode::Conjecture2, n, options);
}

SearchReport verify_edge_deletion_lemma_census(std::size_t n, const SearchOptions& options) {
  check_order(n, 2, kMaxEnumerationOrder, "lemma4 verification");
  ProfileCache local_cache;
  ProfileCache* cache = options.cache != nullptr ? options.cache : &local_cache;
  return check_census(SearchMode::Lemma4, n, enumerate_connected_graphs(n), options,
                      [&](const MultiGraph& g) { verify_edge_deletion_lemma(g, cache, options.limits); });
}

SearchReport verify_parallel_edge_proposition_census(std::size_t n, const SearchOptions& options) {
  check_order(n, 2, kMaxEnumerationOrder, "proposition verification");
  return check_census(SearchMode::Proposition, n, enumerate_connected_graphs(n), options,
                      [&](const MultiGraph& g) { verify_parallel_edge_proposition(g, options.limits); });
}

SearchReport verify_tree_theorem_census(std::size_t n, const SearchOptions& options) {
  check_order(n, 3, kMaxCanonicalOrder, "tree-theorem verification");
  return check_census(SearchMode::TreeTheorem, n, enumerate_trees(n), options,
                      [](const MultiGraph& t) { verify_tree_theorem(t); });
}

SearchReport run_search(SearchMode mode, std::size_t n, const SearchOptions& options) {
  switch (mode) {
    case SearchMode::Conjecture1: return find_conjecture1_counterexamples(n, options);
    case SearchMode::Conjecture2: return verify_conjecture2(n, options);
    case SearchMode::Lemma4: return verify_edge_deletion_lemma_census(n, options);
    case SearchMode::Proposition: return verify_parallel_edge_proposition_census(n, options);
    case SearchMode::TreeTheorem: return verify_tree_theorem_census(n, options);
  }
  throw Error(ErrorKind::Domain, "unknown search mode");
}

EdgeDeletionWitness verify_edge_deletion_lemma(const MultiGraph& g, ProfileCache* cache, const EngineLimits& limits) {
  if (g.size() == 0) throw Error(ErrorKind::Precondition, "edge-deletion lemma needs at least one edge");
  const auto whole = profile_of(g, cache, limits);
  for (const Edge& e : g.edges()) {
    const auto reduced = profile_of(delete_edge(g, e), cache, limits);
    const IntPolynomial local = whole->poly - reduced->poly;
    const Rational local_mean = log_deriv_at_one(local);
    if (local_mean > whole->mean && whole->mean > reduced->mean) {
      return {e, local_mean, whole->mean, reduced->mean};
    }
  }
  throw Error(ErrorKind::LemmaViolation, "no edge e with mu(G,e) > mu(G) > mu(G-e) in " +
                                             (g.is_simple() ? to_graph6(g) : to_multigraph_json(g)));
}

ParallelEdgeResult verify_parallel_edge_proposition(const MultiGraph& g, const EngineLimits& limits) {
  if (g.order() < 2) throw Error(ErrorKind::Size, "parallel-edge proposition needs order >= 2");
  const SubtreeProfile before = subtree_polynomial(g, limits);

  ParallelEdgeResult out;
  out.old_mean = before.mean;
  if (g.size() == 0) {
    out.edge = {0, 1, 0};
    out.augmented = add_edge(g, 0, 1);
    out.new_mean = subtree_polynomial(out.augmented, limits).mean;
    require(out.new_mean > out.old_mean, ErrorKind::TheoremViolation, "joining two vertices did not raise mu");
    return out;
  }

  const EdgeDeletionWitness witness = verify_edge_deletion_lemma(g, nullptr, limits);
  const Edge e = witness.edge;
  out.edge = e;
  out.augmented = add_edge(g, e.u, e.v);
  const SubtreeProfile after = subtree_polynomial(out.augmented, limits);
  out.new_mean = after.mean;

  // H - f is G itself, so S_{H,f} = S_H - S_G.
  const IntPolynomial local_g = local_polynomial_edge(g, e, limits).poly;
  const IntPolynomial local_h = after.poly - before.poly;
  require(local_h == local_g, ErrorKind::TheoremViolation, "S_{H,f} differs from S_{G,e}");

  const Rational weighted =
      (Rational(eval_at_one(local_g)) * log_deriv_at_one(local_g) + Rational(before.total) * before.mean) /
      Rational(after.total);
  require(weighted == out.new_mean, ErrorKind::TheoremViolation, "weighted-average identity failed");
  require(out.new_mean > out.old_mean, ErrorKind::TheoremViolation, "doubling the witness edge did not raise mu");
  return out;
}

TreeConstruction tree_construction_edge(const MultiGraph& t) {
  if (t.order() < 3) throw Error(ErrorKind::Size, "tree construction needs order >= 3");
  if (!is_tree(t)) throw Error(ErrorKind::NotATree, "tree construction needs a tree");

  for (Vertex u = 0; u < t.order(); ++u) {
    struct Pendant {
      Vertex leaf;
      Vertex neighbour;
      std::size_t order;
    };
    std::vector<Pendant> pendants;
    for (Vertex c = 0; c < t.order(); ++c) {
      if (!t.adjacent(u, c)) continue;
      if (auto path = pendant_path(t, u, c)) pendants.push_back({path->first, c, path->second});
    }
    if (pendants.size() < 2) continue;
    std::sort(pendants.begin(), pendants.end(), [](const Pendant& a, const Pendant& b) { return a.leaf < b.leaf; });

    TreeConstruction out;
    out.u = u;
    out.v = pendants[0].neighbour;
    out.w = pendants[1].neighbour;
    out.p = pendants[0].order;
    out.q = pendants[1].order;
    out.augmented = add_edge(t, out.v, out.w);
    out.edge = {std::min(out.v, out.w), std::max(out.v, out.w), 0};
    return out;
  }
  throw Error(ErrorKind::TheoremViolation, "no vertex with two pendant paths in " + to_graph6(t));
}

TreeTheoremCheck verify_tree_theorem(const MultiGraph& t) {
  TreeTheoremCheck out;
  out.construction = tree_construction_edge(t);
  const TreeConstruction& c = out.construction;

  // R = T - (P u Q); collect P and Q by walking out from v and w.
  std::vector<char> removed(t.order(), 0);
  for (Vertex start : {c.v, c.w}) {
    Vertex prev = c.u;
    Vertex cur = start;
    while (true) {
      removed[cur] = 1;
      Vertex next = cur;
      for (Vertex x = 0; x < t.order(); ++x) {
        if (x != prev && t.adjacent(cur, x)) next = x;
      }
      if (next == cur) break;
      prev = cur;
      cur = next;
    }
  }
  std::vector<Vertex> rest;
  Vertex u_in_r = 0;
  for (Vertex x = 0; x < t.order(); ++x) {
    if (removed[x]) continue;
    if (x == c.u) u_in_r = rest.size();
    rest.push_back(x);
  }
  const IntPolynomial s_ru = tree_local_polynomial_vertex(induced_subgraph(t, rest), u_in_r).poly;

  const LocalProfile tree_local = tree_local_polynomial_vertex(t, c.u);
  const LocalProfile edge_local = local_polynomial_edge(c.augmented, c.edge);
  out.tree_mean = tree_subtree_polynomial(t).mean;
  out.augmented_mean = subtree_polynomial(c.augmented).mean;
  out.edge_local_mean = edge_local.mean;
  out.vertex_local_mean = tree_local.mean;

  const IntPolynomial expected_edge = IntPolynomial::monomial(2) * IntPolynomial::geometric(c.p - 1) *
                                      IntPolynomial::geometric(c.q - 1) *
                                      (IntPolynomial{1} + IntPolynomial{2} * s_ru);
  const IntPolynomial expected_vertex =
      IntPolynomial::geometric(c.p) * IntPolynomial::geometric(c.q) * s_ru;
  const std::string where = " for " + to_graph6(t);
  require(edge_local.poly == expected_edge, ErrorKind::TheoremViolation, "S_{H,e} factorization failed" + where);
  require(tree_local.poly == expected_vertex, ErrorKind::TheoremViolation, "S_{T,u} factorization failed" + where);
  require(out.augmented_mean > out.tree_mean, ErrorKind::TheoremViolation, "mu(H) <= mu(T)" + where);
  require(out.edge_local_mean > out.vertex_local_mean, ErrorKind::TheoremViolation, "mu(H,e) <= mu(T,u)" + where);
  return out;
}

}  // namespace mso
