#include "mso/families.hpp"

#include <charconv>
#include <vector>

#include "mso/error.hpp"

namespace mso {

MultiGraph make_path(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::Size, "path needs at least one vertex");
  MultiGraph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.increment(v, v + 1);
  return g;
}

MultiGraph make_cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::Size, "cycle needs at least 3 vertices, got " + std::to_string(n));
  MultiGraph g = make_path(n);
  g.increment(0, n - 1);
  return g;
}

MultiGraph make_complete(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::Size, "complete graph needs at least one vertex");
  MultiGraph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.increment(u, v);
  }
  return g;
}

MultiGraph make_complete_bipartite(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw Error(ErrorKind::Size, "complete bipartite parts must be nonempty");
  MultiGraph g(m + n);
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex v = m; v < m + n; ++v) g.increment(u, v);
  }
  return g;
}

MultiGraph make_star(std::size_t leaves) { return make_complete_bipartite(1, leaves); }

MultiGraph make_h_n(std::size_t n) {
  if (n < 4) throw Error(ErrorKind::Size, "H_n needs n >= 4, got " + std::to_string(n));
  MultiGraph g = make_complete_bipartite(2, n - 2);
  g.increment(0, 1);
  return g;
}

MultiGraph make_edge_addition_counterexample() {
  enum : Vertex { a, b, c, d, e, f, g };
  return MultiGraph(7, {{a, c}, {b, c}, {a, d}, {a, e}, {a, f}, {a, g},
                        {b, d}, {b, e}, {b, f}, {b, g}, {d, e}, {f, g}});
}

void BroomSpec::validate() const {
  if (n < 3 || 2 * s > n - 3) {
    throw Error(ErrorKind::InvalidSpec, "broom spec needs 2s <= n - 3 (n=" + std::to_string(n) +
                                            ", s=" + std::to_string(s) + ")");
  }
}

MultiGraph make_t_n(const BroomSpec& spec) {
  spec.validate();
  const std::size_t len = spec.path_order();
  MultiGraph t(spec.n);
  for (Vertex v = 0; v + 1 < len; ++v) t.increment(v, v + 1);
  for (std::size_t i = 0; i < spec.s; ++i) {
    t.increment(0, len + i);
    t.increment(len - 1, len + spec.s + i);
  }
  return t;
}

std::pair<MultiGraph, Edge> make_g_n(const BroomSpec& spec) {
  MultiGraph t = make_t_n(spec);
  const Edge e{0, spec.path_order() - 1, 0};
  t.increment(e.u, e.v);
  return {std::move(t), e};
}

std::size_t default_s_sequence(std::size_t n) {
  if (n < 32) throw Error(ErrorKind::Domain, "default s_n is defined for n >= 32, got " + std::to_string(n));
  const BigInt square = BigInt(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n);
  std::size_t s = 0;
  BigInt power = 1;
  while (power < square) {
    power <<= 1;
    ++s;
  }
  BroomSpec{n, s}.validate();
  return s;
}

ClosedForm cycle_edge_closed_form(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::Size, "cycle needs at least 3 vertices, got " + std::to_string(n));
  const BigInt nn = static_cast<unsigned long>(n);
  ClosedForm out;
  out.total = binomial(n, 2);
  out.weight = nn * (nn - 1) * (2 * nn + 2) / 6;
  out.mean = Rational(BigInt(2 * nn + 2), BigInt(3));
  return out;
}

IntPolynomial cycle_edge_polynomial(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::Size, "cycle needs at least 3 vertices, got " + std::to_string(n));
  std::vector<BigInt> c(n + 1);
  for (std::size_t i = 0; i + 2 <= n; ++i) c[i + 2] = static_cast<unsigned long>(i + 1);
  return IntPolynomial(std::move(c));
}

IntPolynomial gn_edge_polynomial(const BroomSpec& spec) {
  spec.validate();
  return IntPolynomial::one_plus_x_pow(2 * spec.s) * cycle_edge_polynomial(spec.path_order());
}

Rational gn_edge_mean_closed_form(const BroomSpec& spec) {
  spec.validate();
  return Rational(BigInt(static_cast<unsigned long>(2 * spec.n + 2 - spec.s)), BigInt(3));
}

BigInt tn_count_closed_form(const BroomSpec& spec) {
  spec.validate();
  const std::size_t inner = spec.n - 2 * spec.s - 1;
  return BigInt(static_cast<unsigned long>(2 * spec.s)) + binomial(inner, 2) +
         BigInt(static_cast<unsigned long>(2 * inner)) * pow2(spec.s) + pow2(2 * spec.s);
}

namespace {

std::vector<std::size_t> parse_params(std::string_view spec, std::string_view name, std::size_t count) {
  std::vector<std::size_t> out;
  std::size_t pos = name.size();
  while (pos < spec.size()) {
    if (spec[pos] != ':') throw ParseError(pos, "expected ':' in family spec '" + std::string(spec) + "'");
    ++pos;
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(spec.data() + pos, spec.data() + spec.size(), value);
    if (ec != std::errc{} || ptr == spec.data() + pos) {
      throw ParseError(pos, "expected a non-negative integer in family spec '" + std::string(spec) + "'");
    }
    pos = static_cast<std::size_t>(ptr - spec.data());
    out.push_back(value);
  }
  if (out.size() != count) {
    throw ParseError(spec.size(), "family '" + std::string(name) + "' takes " + std::to_string(count) +
                                      " parameter(s)");
  }
  return out;
}

}  // namespace

MultiGraph parse_family_spec(std::string_view spec) {
  const std::string_view name = spec.substr(0, spec.find(':'));
  if (name == "path") return make_path(parse_params(spec, name, 1)[0]);
  if (name == "cycle") return make_cycle(parse_params(spec, name, 1)[0]);
  if (name == "complete") return make_complete(parse_params(spec, name, 1)[0]);
  if (name == "star") return make_star(parse_params(spec, name, 1)[0]);
  if (name == "hn") return make_h_n(parse_params(spec, name, 1)[0]);
  if (name == "kbip") {
    const auto p = parse_params(spec, name, 2);
    return make_complete_bipartite(p[0], p[1]);
  }
  if (name == "broom") {
    const auto p = parse_params(spec, name, 2);
    return make_t_n({p[0], p[1]});
  }
  if (name == "gn") {
    const auto p = parse_params(spec, name, 2);
    return make_g_n({p[0], p[1]}).first;
  }
  if (name == "fig1") {
    parse_params(spec, name, 0);
    return make_edge_addition_counterexample();
  }
  throw ParseError(0, "unknown family '" + std::string(name) + "'");
}

}  // namespace mso
