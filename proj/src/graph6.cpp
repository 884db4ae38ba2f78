#include "twotree/graph6.hpp"

#include <istream>
#include <ostream>

namespace twotree {

namespace {

constexpr unsigned char kBias = 63;

void encode_order(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

unsigned sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", pos);
  unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > 126) throw ParseError("graph6: byte outside printable range 63..126", pos);
  return c - kBias;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  encode_order(out, n);
  unsigned acc = 0;
  int bits = 0;
  for (VertexId j = 1; j < n; ++j)
    for (VertexId i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph graph6_decode(std::string_view text) {
  std::size_t pos = 0;
  std::size_t n = sextet(text, pos++);
  if (n == 63) {
    std::size_t digits = 3;
    if (sextet(text, pos) == 63) {
      ++pos;
      digits = 6;
    }
    n = 0;
    for (std::size_t d = 0; d < digits; ++d) n = (n << 6) | sextet(text, pos++);
  }
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = (pairs + 5) / 6;
  if (text.size() != pos + body)
    throw ParseError("graph6: expected " + std::to_string(pos + body) + " bytes for order " + std::to_string(n),
                     std::min(text.size(), pos + body));
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (VertexId j = 1; j < n; ++j)
    for (VertexId i = 0; i < j; ++i, ++bit) {
      unsigned s = sextet(text, pos + bit / 6);
      if ((s >> (5 - bit % 6)) & 1u) edges.emplace_back(i, j);
    }
  if (bit % 6 != 0) {
    unsigned s = sextet(text, pos + bit / 6);
    if (s & ((1u << (6 - bit % 6)) - 1)) throw ParseError("graph6: nonzero padding bits", pos + bit / 6);
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::string_view view(line);
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (!view.empty()) {
      try {
        out.push_back(graph6_decode(view));
      } catch (const ParseError& e) {
        throw ParseError(e.detail(), offset + e.offset());
      }
    }
    offset += line.size() + 1;
  }
  return out;
}

void write_graph6(std::ostream& out, const Graph& g) { out << graph6_encode(g) << '\n'; }

}  // namespace twotree
