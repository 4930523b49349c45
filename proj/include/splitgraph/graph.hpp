#pragma once

#include <algorithm>
#include <cassert>
#include <string>
#include <variant>
#include <vector>

#include "splitgraph/bitset.hpp"
#include "splitgraph/errors.hpp"

namespace splitgraph {

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

/// Simple undirected graph on labeled vertices {0,...,n-1}, adjacency as one
/// bitset row per vertex. No loops, no multi-edges.
template <std::size_t Words>
class Graph {
public:
  using Bitset = SmallBitset<Words>;

  Graph() = default;
  explicit Graph(int n) : n_(checked_order(n)), adj_(std::size_t(n_)) {}

  int order() const { return n_; }

  int size() const {
    int twice = 0;
    for (const Bitset& row : adj_) twice += row.count();
    return twice / 2;
  }

  bool has_edge(int u, int v) const {
    assert(valid(u) && valid(v));
    return adj_[std::size_t(u)].test(v);
  }

  void add_edge(int u, int v) {
    assert(valid(u) && valid(v));
    assert(u != v);
    adj_[std::size_t(u)].set(v);
    adj_[std::size_t(v)].set(u);
  }

  const Bitset& neighbors(int v) const {
    assert(valid(v));
    return adj_[std::size_t(v)];
  }

  int degree(int v) const { return neighbors(v).count(); }

  /// Edges as {u,v} with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (int v = adj_[std::size_t(u)].find_next(u); v >= 0;
           v = adj_[std::size_t(u)].find_next(v))
        out.push_back({u, v});
    return out;
  }

  bool operator==(const Graph&) const = default;

private:
  static int checked_order(int n) {
    if (n < 0 || n > Bitset::capacity())
      throw CapacityError("graph order " + std::to_string(n) + " exceeds capacity " +
                          std::to_string(Bitset::capacity()));
    return n;
  }

  bool valid(int v) const { return v >= 0 && v < n_; }

  int n_ = 0;
  std::vector<Bitset> adj_;
};

/// Validating constructor for untrusted edge input. Duplicate edges collapse;
/// bad endpoints and self-loops throw.
template <std::size_t W>
Graph<W> new_graph(int n, const std::vector<Edge>& edges) {
  Graph<W> g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range [0, " + std::to_string(n) +
                                  "): {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    g.add_edge(e.u, e.v);
  }
  return g;
}

/// N(S): union of open neighborhoods over S.
template <std::size_t W>
SmallBitset<W> neighborhood(const Graph<W>& g, const SmallBitset<W>& s) {
  SmallBitset<W> out;
  for (int v = s.find_first(); v >= 0; v = s.find_next(v)) out |= g.neighbors(v);
  return out;
}

template <std::size_t W>
bool is_independent(const Graph<W>& g, const SmallBitset<W>& s) {
  for (int v = s.find_first(); v >= 0; v = s.find_next(v))
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

/// Checks every edge directly rather than testing independence of the
/// complement, so it stays meaningful as a certificate predicate.
template <std::size_t W>
bool is_vertex_cover(const Graph<W>& g, const SmallBitset<W>& c) {
  for (int u = 0; u < g.order(); ++u) {
    if (c.test(u)) continue;
    for (int v = g.neighbors(u).find_next(u); v >= 0; v = g.neighbors(u).find_next(v))
      if (!c.test(v)) return false;
  }
  return true;
}

/// True for the empty graph and any single-component graph.
template <std::size_t W>
bool is_connected(const Graph<W>& g) {
  const int n = g.order();
  if (n <= 1) return true;
  SmallBitset<W> seen = SmallBitset<W>::single(0);
  SmallBitset<W> frontier = seen;
  while (frontier.any()) {
    SmallBitset<W> next;
    for (int v = frontier.find_first(); v >= 0; v = frontier.find_next(v))
      next |= g.neighbors(v);
    frontier = next.minus(seen);
    seen |= frontier;
  }
  return seen.count() == n;
}

/// Runtime-width wrapper. Widths cover orders 64/128/256/512; the CLI caps
/// input at n = 256 so a splitting graph (order 2n) always fits the widest.
using GraphAny = std::variant<Graph<1>, Graph<2>, Graph<4>, Graph<8>>;

/// Narrowest variant whose capacity covers `need` vertices.
inline GraphAny make_graph_any(int n, int need) {
  assert(need >= n);
  if (need <= 64) return Graph<1>(n);
  if (need <= 128) return Graph<2>(n);
  if (need <= 256) return Graph<4>(n);
  if (need <= 512) return Graph<8>(n);
  throw CapacityError("graph order " + std::to_string(n) + " needs capacity " +
                      std::to_string(need) + ", maximum is 512");
}

inline GraphAny make_graph_any(int n) { return make_graph_any(n, n); }

inline int order_of(const GraphAny& g) {
  return std::visit([](const auto& gg) { return gg.order(); }, g);
}

inline int size_of(const GraphAny& g) {
  return std::visit([](const auto& gg) { return gg.size(); }, g);
}

inline void add_edge_any(GraphAny& g, int u, int v) {
  std::visit([&](auto& gg) { gg.add_edge(u, v); }, g);
}

inline std::vector<Edge> edges_of(const GraphAny& g) {
  return std::visit([](const auto& gg) { return gg.edges(); }, g);
}

}  // namespace splitgraph
