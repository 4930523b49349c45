#include "splitgraph/graph6.hpp"

#include <cassert>
#include <cstdint>

namespace splitgraph {

namespace {

constexpr int kOffset = 63;
constexpr long long kMaxOrder = 1000000;  // sanity cap before computing n(n-1)/2

int decode_byte(std::string_view line, std::size_t i) {
  const unsigned char c = static_cast<unsigned char>(line[i]);
  if (c < 63 || c > 126)
    throw ParseError("byte 0x" + std::to_string(c) + " outside graph6 range [63,126]",
                     ParseError::Unit::byte, i);
  return c - kOffset;
}

}  // namespace

Graph6Data parse_graph6_data(std::string_view line) {
  if (line.empty()) throw ParseError("empty graph6 line", ParseError::Unit::byte, 0);

  long long n = 0;
  std::size_t pos = 0;
  if (line[0] != '~') {
    n = decode_byte(line, 0);
    pos = 1;
  } else if (line.size() >= 2 && line[1] != '~') {
    if (line.size() < 4)
      throw ParseError("truncated length header (need 4 bytes)", ParseError::Unit::byte,
                       line.size());
    n = (static_cast<long long>(decode_byte(line, 1)) << 12) |
        (static_cast<long long>(decode_byte(line, 2)) << 6) | decode_byte(line, 3);
    pos = 4;
  } else {
    if (line.size() < 8)
      throw ParseError("truncated length header (need 8 bytes)", ParseError::Unit::byte,
                       line.size());
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | decode_byte(line, i);
    pos = 8;
  }
  if (n > kMaxOrder)
    throw CapacityError("graph6 order " + std::to_string(n) + " exceeds supported maximum");

  const long long bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos < body)
    throw ParseError("truncated body: need " + std::to_string(body) + " bytes, have " +
                         std::to_string(line.size() - pos),
                     ParseError::Unit::byte, line.size());
  if (line.size() - pos > body)
    throw ParseError("trailing data after graph body", ParseError::Unit::byte, pos + body);

  std::vector<int> groups(body);
  for (std::size_t i = 0; i < body; ++i) groups[i] = decode_byte(line, pos + i);
  if (bits % 6 != 0) {
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if ((groups[body - 1] & pad_mask) != 0)
      throw ParseError("nonzero padding bits in final byte", ParseError::Unit::byte,
                       pos + body - 1);
  }

  Graph6Data out;
  out.n = static_cast<int>(n);
  // upper triangle, column-major: bit k = j(j-1)/2 + i for pair (i, j), i < j
  for (int j = 1; j < out.n; ++j) {
    const long long col = static_cast<long long>(j) * (j - 1) / 2;
    for (int i = 0; i < j; ++i) {
      const long long k = col + i;
      if ((groups[static_cast<std::size_t>(k / 6)] >> (5 - k % 6)) & 1)
        out.edges.push_back({i, j});
    }
  }
  return out;
}

std::string write_graph6_data(int n, const std::vector<Edge>& edges) {
  assert(n >= 0 && n <= kMaxOrder);
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(kOffset + n);
  } else if (n <= 258047) {
    out += '~';
    out += static_cast<char>(kOffset + ((n >> 12) & 63));
    out += static_cast<char>(kOffset + ((n >> 6) & 63));
    out += static_cast<char>(kOffset + (n & 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6)
      out += static_cast<char>(kOffset + ((n >> shift) & 63));
  }

  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  std::vector<std::uint8_t> groups(static_cast<std::size_t>((bits + 5) / 6), 0);
  for (const Edge& e : edges) {
    const int i = e.u < e.v ? e.u : e.v;
    const int j = e.u < e.v ? e.v : e.u;
    assert(i >= 0 && j < n && i != j);
    const long long k = static_cast<long long>(j) * (j - 1) / 2 + i;
    groups[static_cast<std::size_t>(k / 6)] |= static_cast<std::uint8_t>(1 << (5 - k % 6));
  }
  for (std::uint8_t b : groups) out += static_cast<char>(kOffset + b);
  return out;
}

GraphAny parse_graph6_any(std::string_view line) {
  Graph6Data d = parse_graph6_data(line);
  GraphAny g = make_graph_any(d.n);
  for (const Edge& e : d.edges) add_edge_any(g, e.u, e.v);
  return g;
}

std::string write_graph6_any(const GraphAny& g) {
  return std::visit([](const auto& gg) { return write_graph6(gg); }, g);
}

}  // namespace splitgraph
