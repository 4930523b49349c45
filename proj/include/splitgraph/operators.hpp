#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "splitgraph/graph.hpp"
#include "splitgraph/rng.hpp"

namespace splitgraph {

/// S(G) on 2n vertices. Vertex v in [0, n) is the original, n + v is its
/// copy v'; v' is adjacent to exactly N_G(v), so copies form an independent
/// set and |E(S(G))| = 3|E(G)|.
template <std::size_t W>
struct SplitGraph {
  Graph<W> g;
  int base_n = 0;
};

template <std::size_t W>
SplitGraph<W> splitting_graph(const Graph<W>& base) {
  const int n = base.order();
  Graph<W> s(2 * n);  // CapacityError when 2n exceeds the width
  for (int u = 0; u < n; ++u)
    for (int v = base.neighbors(u).find_next(u); v >= 0; v = base.neighbors(u).find_next(v)) {
      s.add_edge(u, v);
      s.add_edge(n + u, v);
      s.add_edge(u, n + v);
    }
  return {std::move(s), n};
}

/// B(G): bipartite graph on [0, 2n) with edges {u, n+v} and {v, n+u} per edge
/// {u, v} of the base. Parts are [0, n) and [n, 2n).
template <std::size_t W>
Graph<W> bipartite_double_cover(const Graph<W>& base) {
  const int n = base.order();
  Graph<W> b(2 * n);
  for (int u = 0; u < n; ++u)
    for (int v = base.neighbors(u).find_next(u); v >= 0; v = base.neighbors(u).find_next(v)) {
      b.add_edge(u, n + v);
      b.add_edge(v, n + u);
    }
  return b;
}

/// Checks the defining structure of split = S(base). Used by tests and
/// debug-mode assertions.
template <std::size_t W>
bool split_satisfies_invariants(const Graph<W>& base, const SplitGraph<W>& split) {
  const int n = base.order();
  if (split.base_n != n || split.g.order() != 2 * n) return false;
  if (split.g.size() != 3 * base.size()) return false;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u != v && split.g.has_edge(u, v) != base.has_edge(u, v)) return false;
      if (u != v && split.g.has_edge(n + u, v) != base.has_edge(u, v)) return false;
      if (split.g.has_edge(n + u, n + v)) return false;
    }
  for (int v = 0; v < n; ++v)
    if (split.g.degree(v) != 2 * base.degree(v) || split.g.degree(n + v) != base.degree(v))
      return false;
  return true;
}

/// G_k of order n: for k = n the complete graph K_n; for k > n the clique
/// K_{2n-k-1} on [0, 2n-k-1) with k-n+1 pendant vertices attached to the hub
/// vertex 0. Requires n <= k <= 2n-2.
struct FamilySpec {
  int n = 0;
  int k = 0;
};

template <std::size_t W>
struct CounterexampleGraph {
  Graph<W> g;
  int hub = 0;
  SmallBitset<W> pendants;
  FamilySpec spec;
};

template <std::size_t W>
CounterexampleGraph<W> counterexample_graph(const FamilySpec& spec) {
  if (spec.n < 2)
    throw std::invalid_argument("family order must be at least 2, got " +
                                std::to_string(spec.n));
  if (spec.k < spec.n || spec.k > 2 * spec.n - 2)
    throw std::invalid_argument("family target " + std::to_string(spec.k) + " outside [" +
                                std::to_string(spec.n) + ", " + std::to_string(2 * spec.n - 2) +
                                "]");
  CounterexampleGraph<W> out{Graph<W>(spec.n), 0, {}, spec};
  // k = n is a separate case: the complete graph, no pendants. For k > n,
  // clique K_{2n-k-1} on [0, 2n-k-1) plus k-n+1 pendants at hub 0. Note the
  // k = 2n-3 instance degenerates: its K_2 clique makes vertex 1 one more
  // pendant, so the graph collapses to the star K_{1,n-1} and its deficiency
  // is n-2, not k-n. No connected graph of order n >= 4 attains n-3, so the
  // family genuinely skips that value; reports carry the gap.
  const int clique = spec.k == spec.n ? spec.n : 2 * spec.n - spec.k - 1;
  for (int u = 0; u < clique; ++u)
    for (int v = u + 1; v < clique; ++v) out.g.add_edge(u, v);
  for (int p = clique; p < spec.n; ++p) {
    out.g.add_edge(0, p);
    out.pendants.set(p);
  }
  return out;
}

template <std::size_t W>
Graph<W> complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  Graph<W> g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// K_{1,leaves}: hub 0, leaves 1..leaves.
template <std::size_t W>
Graph<W> star_graph(int leaves) {
  if (leaves < 0) throw std::invalid_argument("star needs a nonnegative leaf count");
  Graph<W> g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

template <std::size_t W>
Graph<W> path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  Graph<W> g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

template <std::size_t W>
Graph<W> cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph<W> g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  g.add_edge(n - 1, 0);
  return g;
}

/// Deterministic G(n, p): pairs (u, v), u < v, visited in lexicographic
/// order; each consumes one splitmix64 draw.
template <std::size_t W>
Graph<W> erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("erdos_renyi needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability outside [0, 1]");
  Graph<W> g(n);
  SplitMix64 rng(seed);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_double() < p) g.add_edge(u, v);
  return g;
}

/// Number of vertex pairs, i.e. the edge-mask width for order n.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Labeled graph for an edge-subset mask: bit b of mask covers the b-th pair
/// (u, v) in lexicographic order.
template <std::size_t W>
Graph<W> graph_from_mask(int n, std::uint64_t mask) {
  Graph<W> g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) g.add_edge(u, v);
  return g;
}

/// Streams every labeled connected graph on n vertices exactly once, by
/// filtering all 2^(n(n-1)/2) edge subsets. Supported for 2 <= n <= 8; the
/// top order is for long runs only (2^28 masks).
template <typename Fn>
void enumerate_connected_graphs(int n, Fn&& fn) {
  if (n < 2 || n > 8)
    throw std::invalid_argument("connected enumeration supports orders 2..8, got " +
                                std::to_string(n));
  const std::uint64_t masks = 1ULL << pair_count(n);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    Graph<1> g = graph_from_mask<1>(n, mask);
    if (is_connected(g)) fn(g);
  }
}

inline GraphAny widen_for_split(const GraphAny& g) {
  const int n = order_of(g);
  GraphAny out = make_graph_any(n, 2 * n);
  for (const Edge& e : edges_of(g)) add_edge_any(out, e.u, e.v);
  return out;
}

struct SplitGraphAny {
  GraphAny g;
  int base_n = 0;
};

inline SplitGraphAny splitting_graph_any(const GraphAny& g) {
  return std::visit(
      [](const auto& gg) -> SplitGraphAny {
        auto s = splitting_graph(gg);
        return {GraphAny(std::move(s.g)), s.base_n};
      },
      widen_for_split(g));
}

}  // namespace splitgraph
