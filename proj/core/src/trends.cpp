#include "mso/trends.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mso/error.hpp"
#include "mso/families.hpp"
#include "mso/subtree.hpp"

namespace mso {
namespace {

// Rows are independent; workers pull indices and write into their own slot,
// so the output order never depends on scheduling.
std::vector<TrendRow> build_rows(const std::vector<std::size_t>& ns, std::size_t workers,
                                 const std::function<TrendRow(std::size_t)>& make_row) {
  std::vector<TrendRow> rows(ns.size());
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(ns.size(), 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < ns.size(); ++i) rows[i] = make_row(ns[i]);
    return rows;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < ns.size(); i += workers) rows[i] = make_row(ns[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

Rational ratio(const BigInt& a, const BigInt& b) { return Rational(a, b); }

Rational as_rational(std::size_t v) { return Rational(BigInt(static_cast<unsigned long>(v))); }

TrendRow density_gap_row(std::size_t n) {
  const std::size_t s = default_s_sequence(n);
  const BroomSpec spec{n, s};
  const auto [tree_total, tree_weight] = tree_subtree_totals(make_t_n(spec));
  const IntPolynomial local = gn_edge_polynomial(spec);
  const BigInt local_total = eval_at_one(local);
  const BigInt local_weight = deriv_at_one(local);
  const BigInt g_total = tree_total + local_total;
  const BigInt g_weight = tree_weight + local_weight;

  const Rational nn = as_rational(n);
  const Rational den_t = ratio(tree_weight, tree_total) / nn;
  const Rational den_g = ratio(g_weight, g_total) / nn;
  const Rational den_ge = ratio(local_weight, local_total) / nn;

  TrendRow row;
  row.n = n;
  row.values = {
      {"s", as_rational(s)},
      {"den_T", den_t},
      {"den_G", den_g},
      {"den_G_e", den_ge},
      {"gap", den_t - den_g},
      {"den_T_bound", as_rational(n - s - 1) / nn},
      {"tree_weight", ratio(tree_total, g_total)},
  };
  return row;
}

TrendRow path_cycle_row(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::Size, "path-cycle gap needs n >= 3, got " + std::to_string(n));
  const IntPolynomial path = tree_subtree_polynomial(make_path(n)).poly;
  // Subtrees of C_n either contain a fixed edge or are subtrees of C_n - e = P_n.
  const IntPolynomial cycle = cycle_edge_polynomial(n) + path;
  const Rational nn = as_rational(n);
  const Rational den_c = log_deriv_at_one(cycle) / nn;
  const Rational den_p = log_deriv_at_one(path) / nn;
  TrendRow row;
  row.n = n;
  row.values = {{"den_C", den_c}, {"den_P", den_p}, {"gap", den_c - den_p}};
  return row;
}

TrendRow hn_row(std::size_t n) {
  if (n < 4 || n > kMaxHnOrder) {
    throw Error(ErrorKind::Size, "hn-gap is computed by enumeration for 4 <= n <= " +
                                     std::to_string(kMaxHnOrder) + ", got " + std::to_string(n));
  }
  const Rational mu_k = subtree_polynomial(make_complete_bipartite(2, n - 2)).mean;
  const Rational mu_h = subtree_polynomial(make_h_n(n)).mean;
  TrendRow row;
  row.n = n;
  row.values = {{"mu_K", mu_k}, {"mu_H", mu_h}, {"gap", mu_k - mu_h}};
  return row;
}

}  // namespace

const Rational& TrendRow::at(const std::string& name) const {
  for (const auto& [key, value] : values) {
    if (key == name) return value;
  }
  throw Error(ErrorKind::Domain, "trend row has no column '" + name + "'");
}

std::vector<TrendRow> density_gap_table(const std::vector<std::size_t>& ns, std::size_t workers) {
  for (std::size_t n : ns) default_s_sequence(n);
  return build_rows(ns, workers, density_gap_row);
}

std::vector<TrendRow> path_cycle_gap_table(const std::vector<std::size_t>& ns, std::size_t workers) {
  return build_rows(ns, workers, path_cycle_row);
}

std::vector<TrendRow> hn_gap_table(const std::vector<std::size_t>& ns, std::size_t workers) {
  return build_rows(ns, workers, hn_row);
}

std::string trend_csv(const std::vector<TrendRow>& rows, int digits) {
  std::ostringstream os;
  os << "n";
  if (!rows.empty()) {
    for (const auto& [name, _] : rows.front().values) os << ',' << name << ',' << name << "_decimal";
  }
  os << '\n';
  for (const auto& row : rows) {
    os << row.n;
    for (const auto& [_, value] : row.values) os << ',' << value.str() << ',' << to_decimal(value, digits);
    os << '\n';
  }
  return os.str();
}

std::string trend_json(const std::vector<TrendRow>& rows, int digits) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json r;
    r["n"] = row.n;
    for (const auto& [name, value] : row.values) {
      r[name] = value.str();
      r[name + "_decimal"] = to_decimal(value, digits);
    }
    out.push_back(std::move(r));
  }
  return out.dump(2) + "\n";
}

}  // namespace mso
