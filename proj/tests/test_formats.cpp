#include <string>
#include <vector>

#include "doctest.h"
#include "splitgraph/formats.hpp"
#include "splitgraph/graph6.hpp"

using namespace splitgraph;

TEST_CASE("edge list parses header plus exactly m edges") {
  const EdgeListData d = parse_edge_list_data("4 3\n0 1\n1 2\n2 3\n");
  CHECK(d.n == 4);
  CHECK(d.edges == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});

  // blank lines are ignored, CRLF accepted, duplicates collapse in the graph
  const GraphAny g = parse_edge_list_any("3 3\r\n\r\n0 1\r\n1 0\r\n\t \r\n1 2\r\n");
  CHECK(order_of(g) == 3);
  CHECK(size_of(g) == 2);
  CHECK(parse_edge_list_any("2 0\n") == GraphAny(Graph<1>(2)));
}

TEST_CASE("edge list errors carry 1-based line numbers") {
  const auto line_of = [](const std::string& text) {
    try {
      parse_edge_list_data(text);
    } catch (const ParseError& e) {
      CHECK(e.unit() == ParseError::Unit::line);
      return static_cast<long long>(e.position());
    }
    return -1LL;
  };
  CHECK(line_of("") == 1);                    // missing header
  CHECK(line_of("3") == 1);                   // header must be "n m"
  CHECK(line_of("x 2\n0 1\n0 2") == 1);       // bad n
  CHECK(line_of("-1 0") == 1);                // negative n
  CHECK(line_of("3 2\n0 1") == 2);            // too few edge lines
  CHECK(line_of("3 1\n0 1\n0 2") == 3);       // too many edge lines
  CHECK(line_of("3 1\n0 1 2") == 2);          // not "u v"
  CHECK(line_of("3 1\n0 3") == 2);            // endpoint out of range
  CHECK(line_of("3 1\n1 1") == 2);            // self-loop
  CHECK(line_of("3 2\n\n0 1\n\n0 x") == 5);   // physical line numbers survive blanks

  try {
    parse_edge_list_data("3 1\n0 3");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()) == "line 2: endpoint out of range [0, 3)");
  }
}

TEST_CASE("edge list writes are sorted and round trip") {
  GraphAny g = make_graph_any(4);
  add_edge_any(g, 2, 3);
  add_edge_any(g, 1, 0);
  CHECK(write_edge_list(g) == "4 2\n0 1\n2 3\n");
  CHECK(parse_edge_list_any(write_edge_list(g)) == g);
  for (const char* line : {"A_", "Bw", "Cl", "E{a?"}) {
    const GraphAny parsed = parse_graph6_any(line);
    CHECK(parse_edge_list_any(write_edge_list(parsed)) == parsed);
  }
}

TEST_CASE("labeled edge list remaps sorted labels") {
  const LabeledEdgeList parsed = parse_labeled_edge_list("b a\nc a\nb\tc\n");
  CHECK(parsed.labels == std::vector<std::string>{"a", "b", "c"});
  CHECK(order_of(parsed.g) == 3);
  CHECK(edges_of(parsed.g) == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});

  const LabeledEdgeList dup = parse_labeled_edge_list("x y\ny x\n");
  CHECK(size_of(dup.g) == 1);

  CHECK(parse_labeled_edge_list("").labels.empty());
  CHECK_THROWS_AS(parse_labeled_edge_list("a a\n"), ParseError);
  CHECK_THROWS_AS(parse_labeled_edge_list("a b c\n"), ParseError);
  try {
    parse_labeled_edge_list("u v\nw w\n");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("dot export") {
  const GraphAny p3 = parse_edge_list_any("3 2\n0 1\n1 2\n");
  CHECK(write_dot(p3) ==
        "graph G {\n"
        "  v0 [label=\"0\"];\n"
        "  v1 [label=\"1\"];\n"
        "  v2 [label=\"2\"];\n"
        "  v0 -- v1;\n"
        "  v1 -- v2;\n"
        "}\n");

  // splitting-graph rendering: copies are boxed and primed
  const GraphAny s = parse_edge_list_any("4 3\n0 1\n0 3\n1 2\n");
  const std::string dot = write_dot(s, 2);
  CHECK(dot.find("  v1 [label=\"1\"];\n") != std::string::npos);
  CHECK(dot.find("  v2 [label=\"0'\", shape=box];\n") != std::string::npos);
  CHECK(dot.find("  v3 [label=\"1'\", shape=box];\n") != std::string::npos);
}
