#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "splitgraph/graph.hpp"

namespace splitgraph {

/// All five invariants of one graph with checkable witnesses. alpha1 is
/// absent when an isolated vertex makes the edge cover undefined. The
/// deficiency witness comes from the exhaustive oracle and is present only
/// when the order is within the oracle bound; the value itself is always
/// present (matching-based above the bound).
struct InvariantReport {
  int n = 0;
  int edge_count = 0;
  int beta0 = 0;
  std::vector<int> beta0_witness;
  int alpha0 = 0;
  std::vector<int> alpha0_witness;
  int beta1 = 0;
  std::vector<Edge> beta1_witness;
  std::optional<int> alpha1;
  std::vector<Edge> alpha1_witness;
  int beta0_star = 0;
  bool beta0_star_witnessed = false;
  std::vector<int> beta0_star_witness;
  std::vector<int> beta0_star_neighborhood;
};

InvariantReport compute_invariants(const GraphAny& g, int oracle_bound = 20);

/// Fixed-width text rendering, one invariant per row plus the Gallai sums.
std::string invariants_table(const InvariantReport& r);

nlohmann::ordered_json invariants_json(const InvariantReport& r);

}  // namespace splitgraph
