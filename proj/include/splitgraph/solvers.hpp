#pragma once

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "splitgraph/errors.hpp"
#include "splitgraph/graph.hpp"

namespace splitgraph {

template <std::size_t W>
struct VertexSetResult {
  int size = 0;
  SmallBitset<W> witness;
};

struct EdgeSetResult {
  int size = 0;
  std::vector<Edge> witness;
};

/// Exact maximum-independent-set search. Branches on the vertex of highest
/// candidate degree (include first, then exclude), takes candidate-isolated
/// vertices outright, and prunes with a greedy clique-cover bound. The bound
/// affects runtime only, never results. Exponential worst case; intended for
/// graphs up to ~30 vertices.
template <std::size_t W>
class MisSolver {
public:
  explicit MisSolver(const Graph<W>& g) : g_(g) {}

  int max_size(SmallBitset<W> cand) {
    best_ = 0;
    target_ = 0;
    rec(cand, 0);
    return best_;
  }

  int max_size() { return max_size(SmallBitset<W>::full(g_.order())); }

  /// Decision form: does cand contain an independent set of size >= target?
  bool reaches(SmallBitset<W> cand, int target) {
    if (target <= 0) return true;
    best_ = 0;
    target_ = target;
    rec(cand, 0);
    return best_ >= target;
  }

private:
  void rec(SmallBitset<W> cand, int size) {
    if (target_ > 0 && best_ >= target_) return;
    for (int v = cand.find_first(); v >= 0; v = cand.find_next(v))
      if (!g_.neighbors(v).intersects(cand)) {
        ++size;
        cand.reset(v);
      }
    if (cand.none()) {
      if (size > best_) best_ = size;
      return;
    }
    const int ub = size + clique_cover_bound(cand);
    if (ub <= best_) return;
    if (target_ > 0 && ub < target_) return;
    int bv = -1, bd = -1;
    for (int v = cand.find_first(); v >= 0; v = cand.find_next(v)) {
      const int d = (g_.neighbors(v) & cand).count();
      if (d > bd) {
        bd = d;
        bv = v;
      }
    }
    SmallBitset<W> with = cand.minus(g_.neighbors(bv));
    with.reset(bv);
    rec(with, size + 1);
    cand.reset(bv);
    rec(cand, size);
  }

  /// Partitions cand into cliques greedily; the clique count bounds any
  /// independent subset (one vertex per clique).
  int clique_cover_bound(const SmallBitset<W>& cand) {
    cliques_.clear();
    for (int v = cand.find_first(); v >= 0; v = cand.find_next(v)) {
      bool placed = false;
      for (SmallBitset<W>& c : cliques_)
        if (c.is_subset_of(g_.neighbors(v))) {
          c.set(v);
          placed = true;
          break;
        }
      if (!placed) cliques_.push_back(SmallBitset<W>::single(v));
    }
    return static_cast<int>(cliques_.size());
  }

  const Graph<W>& g_;
  int best_ = 0;
  int target_ = 0;
  std::vector<SmallBitset<W>> cliques_;
};

/// Size plus the lexicographically smallest optimal witness, found by greedy
/// inclusion: vertex v joins iff a maximum set containing the picks so far
/// and v still exists (one decision solve per vertex).
template <std::size_t W>
VertexSetResult<W> max_independent_set(const Graph<W>& g) {
  const int n = g.order();
  MisSolver<W> solver(g);
  SmallBitset<W> cand = SmallBitset<W>::full(n);
  const int size = solver.max_size(cand);
  SmallBitset<W> witness;
  int need = size;
  for (int v = 0; v < n && need > 0; ++v) {
    if (!cand.test(v)) continue;
    SmallBitset<W> with = cand.minus(g.neighbors(v));
    with.reset(v);
    if (solver.reaches(with, need - 1)) {
      witness.set(v);
      cand = with;
      --need;
    } else {
      cand.reset(v);
    }
  }
  return {size, witness};
}

/// Oracle: plain scan over all 2^n subsets. Cross-validates the solver.
template <std::size_t W>
VertexSetResult<W> max_independent_set_bruteforce(const Graph<W>& g, int bound = 20) {
  const int n = g.order();
  if (n > bound)
    throw BoundError("order " + std::to_string(n) + " exceeds the brute-force bound " +
                     std::to_string(bound));
  assert(n < 64);
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[std::size_t(v)] = g.neighbors(v).word(0);
  int best = -1;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    bool independent = true;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
      if (adj[std::size_t(std::countr_zero(rest))] & mask) {
        independent = false;
        break;
      }
    if (!independent) continue;
    const int c = std::popcount(mask);
    if (c > best || (c == best && set_less(SmallBitset<W>::from_word(mask),
                                           SmallBitset<W>::from_word(best_mask)))) {
      best = c;
      best_mask = mask;
    }
  }
  return {best, SmallBitset<W>::from_word(best_mask)};
}

template <std::size_t W>
int independence_number(const Graph<W>& g) {
  return MisSolver<W>(g).max_size();
}

/// alpha0 = n - beta0; the witness is the complement of the independent-set
/// witness.
template <std::size_t W>
VertexSetResult<W> min_vertex_cover(const Graph<W>& g) {
  const VertexSetResult<W> mis = max_independent_set(g);
  return {g.order() - mis.size, mis.witness.complement(g.order())};
}

template <std::size_t W>
int vertex_cover_number(const Graph<W>& g) {
  return g.order() - independence_number(g);
}

/// Exact maximum matching by include/exclude branch and bound over the
/// lexicographically sorted edge list, bounded by remaining edges and by
/// half the free vertices. Not a blossom algorithm; sized for the audit
/// scale (a few dozen edges).
template <std::size_t W>
class MatchingSolver {
public:
  explicit MatchingSolver(const Graph<W>& g) : g_(g), edges_(g.edges()) {}

  int max_size() {
    best_ = 0;
    target_ = 0;
    rec(0, SmallBitset<W>::full(g_.order()), 0);
    return best_;
  }

  /// Decision form over the edge suffix [from, end): can `target` more
  /// disjoint edges be added when `free` marks the unmatched vertices?
  bool reaches(std::size_t from, SmallBitset<W> free, int target) {
    if (target <= 0) return true;
    best_ = 0;
    target_ = target;
    rec(from, free, 0);
    return best_ >= target;
  }

  const std::vector<Edge>& edges() const { return edges_; }

private:
  void rec(std::size_t idx, SmallBitset<W> free, int size) {
    if (target_ > 0 && best_ >= target_) return;
    while (idx < edges_.size() &&
           !(free.test(edges_[idx].u) && free.test(edges_[idx].v)))
      ++idx;
    if (idx == edges_.size()) {
      if (size > best_) best_ = size;
      return;
    }
    const int ub =
        size + std::min(static_cast<int>(edges_.size() - idx), free.count() / 2);
    if (ub <= best_) return;
    if (target_ > 0 && ub < target_) return;
    SmallBitset<W> taken = free;
    taken.reset(edges_[idx].u);
    taken.reset(edges_[idx].v);
    rec(idx + 1, taken, size + 1);
    rec(idx + 1, free, size);
  }

  const Graph<W>& g_;
  std::vector<Edge> edges_;
  int best_ = 0;
  int target_ = 0;
};

/// Size plus the lexicographically smallest optimal matching (greedy over the
/// sorted edge list with one decision solve per considered edge).
template <std::size_t W>
EdgeSetResult maximum_matching(const Graph<W>& g) {
  MatchingSolver<W> solver(g);
  const int size = solver.max_size();
  EdgeSetResult out{size, {}};
  SmallBitset<W> free = SmallBitset<W>::full(g.order());
  int need = size;
  const std::vector<Edge>& edges = solver.edges();
  for (std::size_t i = 0; i < edges.size() && need > 0; ++i) {
    if (!free.test(edges[i].u) || !free.test(edges[i].v)) continue;
    SmallBitset<W> taken = free;
    taken.reset(edges[i].u);
    taken.reset(edges[i].v);
    if (solver.reaches(i + 1, taken, need - 1)) {
      out.witness.push_back(edges[i]);
      free = taken;
      --need;
    }
  }
  return out;
}

template <std::size_t W>
int matching_number(const Graph<W>& g) {
  return MatchingSolver<W>(g).max_size();
}

/// Maximum matching plus, for each unmatched vertex, its smallest incident
/// edge; alpha1 = n - beta1 follows.
template <std::size_t W>
EdgeSetResult minimum_edge_cover(const Graph<W>& g) {
  const int n = g.order();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0)
      throw std::domain_error("edge cover undefined: vertex " + std::to_string(v) +
                              " is isolated");
  EdgeSetResult cover = maximum_matching(g);
  SmallBitset<W> covered;
  for (const Edge& e : cover.witness) {
    covered.set(e.u);
    covered.set(e.v);
  }
  for (int v = 0; v < n; ++v) {
    if (covered.test(v)) continue;
    const int w = g.neighbors(v).find_first();
    cover.witness.push_back({std::min(v, w), std::max(v, w)});
  }
  std::sort(cover.witness.begin(), cover.witness.end());
  cover.size = static_cast<int>(cover.witness.size());
  return cover;
}

template <std::size_t W>
bool is_matching(const Graph<W>& g, const std::vector<Edge>& edges) {
  SmallBitset<W> used;
  for (const Edge& e : edges) {
    if (!g.has_edge(e.u, e.v)) return false;
    if (used.test(e.u) || used.test(e.v)) return false;
    used.set(e.u);
    used.set(e.v);
  }
  return true;
}

template <std::size_t W>
bool is_edge_cover(const Graph<W>& g, const std::vector<Edge>& edges) {
  SmallBitset<W> covered;
  for (const Edge& e : edges) {
    if (!g.has_edge(e.u, e.v)) return false;
    covered.set(e.u);
    covered.set(e.v);
  }
  return covered == SmallBitset<W>::full(g.order());
}

/// Hopcroft-Karp over an explicitly bipartitioned graph: `left` is one part,
/// its complement the other. Any edge inside a part is rejected.
template <std::size_t W>
int bipartite_matching(const Graph<W>& g, const SmallBitset<W>& left) {
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    const bool ul = left.test(u);
    for (int v = g.neighbors(u).find_next(u); v >= 0; v = g.neighbors(u).find_next(v))
      if (left.test(v) == ul)
        throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                    "} lies inside one part; not bipartite as given");
  }

  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> match(static_cast<std::size_t>(n), -1);
  std::vector<int> dist(static_cast<std::size_t>(n), 0);
  std::vector<int> lefts;
  for (int v = left.find_first(); v >= 0; v = left.find_next(v)) lefts.push_back(v);
  std::vector<int> queue;
  queue.reserve(lefts.size());

  const auto bfs = [&]() {
    queue.clear();
    for (int u : lefts) {
      if (match[std::size_t(u)] < 0) {
        dist[std::size_t(u)] = 0;
        queue.push_back(u);
      } else {
        dist[std::size_t(u)] = kInf;
      }
    }
    bool reachable_free = false;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int u = queue[qi];
      for (int w = g.neighbors(u).find_first(); w >= 0; w = g.neighbors(u).find_next(w)) {
        const int mate = match[std::size_t(w)];
        if (mate < 0) {
          reachable_free = true;
        } else if (dist[std::size_t(mate)] == kInf) {
          dist[std::size_t(mate)] = dist[std::size_t(u)] + 1;
          queue.push_back(mate);
        }
      }
    }
    return reachable_free;
  };

  const auto dfs = [&](auto&& self, int u) -> bool {
    for (int w = g.neighbors(u).find_first(); w >= 0; w = g.neighbors(u).find_next(w)) {
      const int mate = match[std::size_t(w)];
      if (mate < 0 || (dist[std::size_t(mate)] == dist[std::size_t(u)] + 1 && self(self, mate))) {
        match[std::size_t(u)] = w;
        match[std::size_t(w)] = u;
        return true;
      }
    }
    dist[std::size_t(u)] = kInf;
    return false;
  };

  int size = 0;
  while (bfs())
    for (int u : lefts)
      if (match[std::size_t(u)] < 0 && dfs(dfs, u)) ++size;
  return size;
}

}  // namespace splitgraph
