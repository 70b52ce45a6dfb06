// graph6 and multigraph-JSON interchange.

#include <json.hpp>

#include "mso/error.hpp"
#include "mso/graph.hpp"

namespace mso {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::size_t kMaxGraph6Order = 62;

}  // namespace

MultiGraph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) base = kGraph6Header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  if (text.size() <= base) throw ParseError(base, "graph6 string is empty");
  const int head = static_cast<unsigned char>(text[base]);
  if (head == 126) throw ParseError(base, "graph6 orders above 62 are not supported");
  if (head < 63 || head > 125) throw ParseError(base, "invalid graph6 order byte");
  const std::size_t n = static_cast<std::size_t>(head - 63);

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t payload = (bits + 5) / 6;
  const std::size_t have = text.size() - base - 1;
  if (have < payload) {
    throw ParseError(text.size(), "truncated graph6 payload: expected " + std::to_string(payload) +
                                      " bytes, found " + std::to_string(have));
  }
  if (have > payload) throw ParseError(base + 1 + payload, "trailing bytes after graph6 payload");

  for (std::size_t p = base + 1; p < text.size(); ++p) {
    const int byte = static_cast<unsigned char>(text[p]);
    if (byte < 63 || byte > 126) throw ParseError(p, "invalid graph6 payload byte");
  }

  MultiGraph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const std::size_t offset = base + 1 + k / 6;
      const int byte = static_cast<unsigned char>(text[offset]);
      if (((byte - 63) >> (5 - k % 6)) & 1) g.increment(i, j);
    }
  }
  return g;
}

std::string to_graph6(const MultiGraph& g) {
  if (!g.is_simple()) throw Error(ErrorKind::Unsupported, "graph6 cannot express parallel edges");
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) throw Error(ErrorKind::Size, "graph6 output limited to 62 vertices");

  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

MultiGraph parse_multigraph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, "malformed multigraph JSON");
  }
  try {
    const auto n = doc.at("n").get<long long>();
    if (n < 0) throw ParseError(0, "multigraph JSON: negative order");
    MultiGraph g(static_cast<std::size_t>(n));
    for (const auto& entry : doc.at("edges")) {
      if (!entry.is_array() || entry.size() != 3) {
        throw ParseError(0, "multigraph JSON: each edge must be [u, v, multiplicity]");
      }
      const auto u = entry[0].get<long long>();
      const auto v = entry[1].get<long long>();
      const auto m = entry[2].get<long long>();
      if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorKind::OutOfBounds, "multigraph JSON: vertex out of range");
      if (u >= v) throw ParseError(0, "multigraph JSON: edges must satisfy u < v");
      if (m < 1) throw ParseError(0, "multigraph JSON: multiplicity must be >= 1");
      g.increment(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<std::uint32_t>(m));
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("multigraph JSON: ") + e.what());
  }
}

std::string to_multigraph_json(const MultiGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (const auto m = g.mult(u, v); m != 0) edges.push_back({u, v, m});
    }
  }
  nlohmann::json doc = {{"n", g.order()}, {"edges", std::move(edges)}};
  return doc.dump();
}

}  // namespace mso
