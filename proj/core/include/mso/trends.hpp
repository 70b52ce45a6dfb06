#pragma once

// Exact trend tables for the asymptotic density claims. Each row is exact;
// decimals only appear when a table is rendered.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mso/exact.hpp"

namespace mso {

struct TrendRow {
  std::size_t n = 0;
  std::vector<std::pair<std::string, Rational>> values;

  /// Throws Domain if the column is missing.
  const Rational& at(const std::string& name) const;
};

/// Columns: s, den_T, den_G, den_G_e, gap (den_T - den_G), den_T_bound
/// ((n - s - 1)/n), tree_weight (S_T(1)/S_G(1)). s is the default sequence.
/// n >= 32. G_n is assembled from the tree DP plus the closed edge-local
/// product, so n in the thousands is cheap.
std::vector<TrendRow> density_gap_table(const std::vector<std::size_t>& ns, std::size_t workers = 1);

/// Columns: den_C, den_P, gap (den_C - den_P). n >= 3.
std::vector<TrendRow> path_cycle_gap_table(const std::vector<std::size_t>& ns, std::size_t workers = 1);

/// Columns: mu_K, mu_H, gap (mu(K_{2,n-2}) - mu(H_n)). 4 <= n <= 16; computed
/// by the general engine.
std::vector<TrendRow> hn_gap_table(const std::vector<std::size_t>& ns, std::size_t workers = 1);

inline constexpr std::size_t kMaxHnOrder = 16;

/// Header "n,<col>,<col>_decimal,...", one line per row.
std::string trend_csv(const std::vector<TrendRow>& rows, int digits);
std::string trend_json(const std::vector<TrendRow>& rows, int digits);

}  // namespace mso
