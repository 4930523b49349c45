#include "splitgraph/formats.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace splitgraph {

namespace {

struct Line {
  std::size_t number = 0;  // 1-based
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++lineno;
    Line line{lineno, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      if (j > i) line.tokens.emplace_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

int parse_int(const std::string& token, std::size_t lineno, const char* what) {
  int value = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0)
    throw ParseError(std::string("expected nonnegative integer for ") + what + ", got \"" +
                         token + "\"",
                     ParseError::Unit::line, lineno);
  return value;
}

}  // namespace

EdgeListData parse_edge_list_data(std::string_view text) {
  const std::vector<Line> lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError("missing \"n m\" header", ParseError::Unit::line, 1);
  const Line& header = lines[0];
  if (header.tokens.size() != 2)
    throw ParseError("header must be \"n m\"", ParseError::Unit::line, header.number);
  EdgeListData out;
  out.n = parse_int(header.tokens[0], header.number, "n");
  const int m = parse_int(header.tokens[1], header.number, "m");

  if (static_cast<int>(lines.size()) - 1 != m) {
    const std::size_t at =
        static_cast<int>(lines.size()) - 1 > m ? lines[std::size_t(m) + 1].number
                                               : lines.back().number;
    throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(lines.size() - 1),
                     ParseError::Unit::line, at);
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 2)
      throw ParseError("edge line must be \"u v\"", ParseError::Unit::line, line.number);
    const int u = parse_int(line.tokens[0], line.number, "u");
    const int v = parse_int(line.tokens[1], line.number, "v");
    if (u >= out.n || v >= out.n)
      throw ParseError("endpoint out of range [0, " + std::to_string(out.n) + ")",
                       ParseError::Unit::line, line.number);
    if (u == v)
      throw ParseError("self-loop at vertex " + std::to_string(u), ParseError::Unit::line,
                       line.number);
    out.edges.push_back({u, v});
  }
  return out;
}

GraphAny parse_edge_list_any(std::string_view text) {
  EdgeListData d = parse_edge_list_data(text);
  GraphAny g = make_graph_any(d.n);
  for (const Edge& e : d.edges) add_edge_any(g, e.u, e.v);
  return g;
}

std::string write_edge_list(const GraphAny& g) {
  std::ostringstream out;
  const std::vector<Edge> edges = edges_of(g);
  out << order_of(g) << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

LabeledEdgeList parse_labeled_edge_list(std::string_view text) {
  const std::vector<Line> lines = tokenize_lines(text);
  std::map<std::string, int> table;
  for (const Line& line : lines) {
    if (line.tokens.size() != 2)
      throw ParseError("edge line must be two labels", ParseError::Unit::line, line.number);
    if (line.tokens[0] == line.tokens[1])
      throw ParseError("self-loop at label \"" + line.tokens[0] + "\"", ParseError::Unit::line,
                       line.number);
    table.emplace(line.tokens[0], 0);
    table.emplace(line.tokens[1], 0);
  }
  LabeledEdgeList out{make_graph_any(static_cast<int>(table.size())), {}};
  out.labels.reserve(table.size());
  int next = 0;
  for (auto& [label, id] : table) {
    id = next++;
    out.labels.push_back(label);
  }
  for (const Line& line : lines)
    add_edge_any(out.g, table.at(line.tokens[0]), table.at(line.tokens[1]));
  return out;
}

std::string write_dot(const GraphAny& g, int base_n) {
  std::ostringstream out;
  out << "graph G {\n";
  const int n = order_of(g);
  for (int v = 0; v < n; ++v) {
    if (base_n >= 0 && v >= base_n)
      out << "  v" << v << " [label=\"" << (v - base_n) << "'\", shape=box];\n";
    else
      out << "  v" << v << " [label=\"" << v << "\"];\n";
  }
  for (const Edge& e : edges_of(g)) out << "  v" << e.u << " -- v" << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace splitgraph
