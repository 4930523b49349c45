#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "splitgraph/errors.hpp"
#include "splitgraph/graph.hpp"

namespace splitgraph {

/// Decoded graph6 line before adjacency construction.
struct Graph6Data {
  int n = 0;
  std::vector<Edge> edges;
};

/// Strict graph6 decode. Accepts the one-byte header (n <= 62) and the
/// '~'-prefixed long forms; rejects out-of-charset bytes, truncated or
/// oversized bodies, and nonzero padding bits, reporting the byte offset.
Graph6Data parse_graph6_data(std::string_view line);

/// Canonical graph6 encode for a fixed labeling (minimal header form).
std::string write_graph6_data(int n, const std::vector<Edge>& edges);

template <std::size_t W>
Graph<W> parse_graph6(std::string_view line) {
  Graph6Data d = parse_graph6_data(line);
  return new_graph<W>(d.n, d.edges);
}

template <std::size_t W>
std::string write_graph6(const Graph<W>& g) {
  return write_graph6_data(g.order(), g.edges());
}

/// Parses into the narrowest width that holds the graph itself; widen before
/// splitting (see widen_for_split).
GraphAny parse_graph6_any(std::string_view line);

std::string write_graph6_any(const GraphAny& g);

}  // namespace splitgraph
