#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "splitgraph/errors.hpp"
#include "splitgraph/graph.hpp"

namespace splitgraph {

/// Strict edge-list decode: header "n m", then exactly m lines "u v" with
/// 0-based endpoints. Blank lines are ignored; duplicate edges collapse;
/// self-loops and range violations are errors (1-based line numbers).
struct EdgeListData {
  int n = 0;
  std::vector<Edge> edges;
};

EdgeListData parse_edge_list_data(std::string_view text);
GraphAny parse_edge_list_any(std::string_view text);

/// "n m" header plus lexicographically sorted "u v" lines.
std::string write_edge_list(const GraphAny& g);

/// Lenient variant: no header, one edge per line as two whitespace-separated
/// arbitrary labels. Labels are sorted lexicographically and remapped to
/// [0, n); the table index -> original label is returned alongside.
struct LabeledEdgeList {
  GraphAny g;
  std::vector<std::string> labels;
};

LabeledEdgeList parse_labeled_edge_list(std::string_view text);

/// DOT export. With base_n >= 0 the graph is rendered as a splitting graph:
/// vertices below base_n keep plain labels, vertex base_n + v is drawn boxed
/// with label "v'".
std::string write_dot(const GraphAny& g, int base_n = -1);

}  // namespace splitgraph
