#include "mso/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>

#include "mso/error.hpp"

namespace mso {
namespace {

using Mask = std::uint32_t;
using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;

std::size_t pair_index(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

// Individualisation-refinement search for the labeling with the largest code.
class Canonizer {
 public:
  explicit Canonizer(const MultiGraph& g) : n_(g.order()), pairs_(n_ * (n_ - (n_ ? 1 : 0)) / 2) {
    for (Vertex v = 0; v < n_; ++v) adj_[v] = static_cast<Mask>(g.neighbor_mask(v));
  }

  CanonicalLabeling run() {
    if (n_ == 0) return {{0, 0}, {}};
    Cell all(n_);
    for (Vertex v = 0; v < n_; ++v) all[v] = v;
    Partition start{all};
    refine(start);
    search(start);

    CanonicalLabeling out;
    out.form = {n_, best_code_};
    out.perm.assign(n_, 0);
    for (std::size_t pos = 0; pos < n_; ++pos) out.perm[best_order_[pos]] = pos;
    return out;
  }

 private:
  // Splits cells by neighbour counts into every cell until stable. Sub-cells are
  // ordered by their count signature, which keeps the result label-invariant.
  void refine(Partition& part) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Mask> cell_masks(part.size(), 0);
      for (std::size_t c = 0; c < part.size(); ++c) {
        for (Vertex v : part[c]) cell_masks[c] |= Mask{1} << v;
      }
      Partition next;
      next.reserve(n_);
      for (const Cell& cell : part) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) {
          std::vector<int> sig(cell_masks.size());
          for (std::size_t c = 0; c < cell_masks.size(); ++c) sig[c] = std::popcount(adj_[v] & cell_masks[c]);
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::size_t start = 0;
        for (std::size_t i = 1; i <= keyed.size(); ++i) {
          if (i == keyed.size() || keyed[i].first != keyed[start].first) {
            Cell sub;
            for (std::size_t k = start; k < i; ++k) sub.push_back(keyed[k].second);
            next.push_back(std::move(sub));
            start = i;
          }
        }
      }
      if (next.size() != part.size()) changed = true;
      part = std::move(next);
    }
  }

  // Code bits contributed by the leading singleton cells, as a prefix value
  // together with the number of bits it covers.
  std::pair<std::uint64_t, std::size_t> prefix(const Partition& part) const {
    std::size_t fixed = 0;
    while (fixed < part.size() && part[fixed].size() == 1) ++fixed;
    std::uint64_t code = 0;
    for (std::size_t j = 1; j < fixed; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        code = (code << 1) | ((adj_[part[i][0]] >> part[j][0]) & 1u);
      }
    }
    return {code, fixed * (fixed - (fixed ? 1 : 0)) / 2};
  }

  bool twins(Vertex a, Vertex b) const {
    const Mask without = ~((Mask{1} << a) | (Mask{1} << b));
    return (adj_[a] & without) == (adj_[b] & without);
  }

  void search(const Partition& part) {
    const auto [code, width] = prefix(part);
    if (have_best_ && width > 0) {
      const std::uint64_t best_prefix = best_code_ >> (pairs_ - width);
      if (code < best_prefix) return;
    }
    if (part.size() == n_) {
      if (!have_best_ || code > best_code_) {
        have_best_ = true;
        best_code_ = code;
        best_order_.clear();
        for (const Cell& c : part) best_order_.push_back(c[0]);
      }
      return;
    }

    std::size_t target = 0;
    while (part[target].size() == 1) ++target;
    const Cell& cell = part[target];
    std::vector<Vertex> explored;
    for (Vertex w : cell) {
      // Swapping twins is an automorphism fixing every individualised vertex,
      // so it maps the subtree under w onto the subtree under its twin.
      if (std::any_of(explored.begin(), explored.end(), [&](Vertex x) { return twins(w, x); })) continue;
      explored.push_back(w);

      Partition child;
      child.reserve(part.size() + 1);
      for (std::size_t c = 0; c < target; ++c) child.push_back(part[c]);
      child.push_back({w});
      Cell rest;
      for (Vertex x : cell) {
        if (x != w) rest.push_back(x);
      }
      child.push_back(std::move(rest));
      for (std::size_t c = target + 1; c < part.size(); ++c) child.push_back(part[c]);
      refine(child);
      search(child);
    }
  }

  std::size_t n_;
  std::size_t pairs_;
  std::array<Mask, kMaxCanonicalOrder> adj_{};
  bool have_best_ = false;
  std::uint64_t best_code_ = 0;
  std::vector<Vertex> best_order_;
};

MultiGraph augment(const MultiGraph& g, Mask neighbourhood) {
  const std::size_t n = g.order();
  MultiGraph h(n + 1);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) h.increment(u, v);
    }
    if ((neighbourhood >> u) & 1u) h.increment(u, n);
  }
  return h;
}

std::vector<MultiGraph> decode_sorted(const std::set<CanonicalForm>& forms) {
  std::vector<MultiGraph> out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(from_canonical(f));
  return out;
}

}  // namespace

CanonicalLabeling canonical_labeling(const MultiGraph& g) {
  if (!g.is_simple()) throw Error(ErrorKind::Unsupported, "canonical form is defined for simple graphs only");
  if (g.order() > kMaxCanonicalOrder) {
    throw Error(ErrorKind::Size, "canonical form supports at most " + std::to_string(kMaxCanonicalOrder) +
                                     " vertices, got " + std::to_string(g.order()));
  }
  return Canonizer(g).run();
}

CanonicalForm canonical_form(const MultiGraph& g) { return canonical_labeling(g).form; }

MultiGraph from_canonical(const CanonicalForm& form) {
  const std::size_t n = form.n;
  if (n > kMaxCanonicalOrder) throw Error(ErrorKind::Size, "canonical form order out of range");
  const std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
  MultiGraph g(n);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if ((form.bits >> (pairs - 1 - pair_index(i, j))) & 1u) g.increment(i, j);
    }
  }
  return g;
}

bool are_isomorphic(const MultiGraph& a, const MultiGraph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

std::vector<MultiGraph> enumerate_connected_graphs(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw Error(ErrorKind::Size, "connected graph enumeration supports orders 1..8, got " + std::to_string(n));
  }
  std::set<CanonicalForm> level{canonical_form(MultiGraph(1))};
  for (std::size_t k = 2; k <= n; ++k) {
    std::set<CanonicalForm> next;
    for (const auto& f : level) {
      const MultiGraph base = from_canonical(f);
      // Every connected graph has a vertex whose removal keeps it connected, so
      // attaching a vertex to a nonempty neighbourhood reaches every class.
      for (Mask nb = 1; nb < (Mask{1} << (k - 1)); ++nb) next.insert(canonical_form(augment(base, nb)));
    }
    level = std::move(next);
  }
  return decode_sorted(level);
}

std::vector<MultiGraph> enumerate_trees(std::size_t n) {
  if (n < 1 || n > kMaxCanonicalOrder) {
    throw Error(ErrorKind::Size, "tree enumeration supports orders 1..10, got " + std::to_string(n));
  }
  std::set<CanonicalForm> level{canonical_form(MultiGraph(1))};
  for (std::size_t k = 2; k <= n; ++k) {
    std::set<CanonicalForm> next;
    for (const auto& f : level) {
      const MultiGraph base = from_canonical(f);
      for (Vertex v = 0; v + 1 < k; ++v) next.insert(canonical_form(augment(base, Mask{1} << v)));
    }
    level = std::move(next);
  }
  return decode_sorted(level);
}

}  // namespace mso
