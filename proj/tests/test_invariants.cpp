#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "splitgraph/graph6.hpp"
#include "splitgraph/invariants.hpp"
#include "splitgraph/operators.hpp"
#include "splitgraph/solvers.hpp"

using namespace splitgraph;

namespace {

GraphAny any_of(const Graph<1>& g) { return GraphAny(g); }

}  // namespace

TEST_CASE("invariants of K2") {
  const InvariantReport r = compute_invariants(any_of(complete_graph<1>(2)));
  CHECK(r.n == 2);
  CHECK(r.edge_count == 1);
  CHECK(r.beta0 == 1);
  CHECK(r.beta0_witness == std::vector<int>{0});
  CHECK(r.alpha0 == 1);
  CHECK(r.alpha0_witness == std::vector<int>{1});
  CHECK(r.beta1 == 1);
  CHECK(r.beta1_witness == std::vector<Edge>{{0, 1}});
  REQUIRE(r.alpha1.has_value());
  CHECK(*r.alpha1 == 1);
  CHECK(r.beta0_star == 0);
  CHECK(r.beta0_star_witnessed);
  CHECK(r.beta0_star_witness.empty());
}

TEST_CASE("invariants of a star") {
  const InvariantReport r = compute_invariants(any_of(star_graph<1>(5)));
  CHECK(r.n == 6);
  CHECK(r.beta0 == 5);
  CHECK(r.alpha0 == 1);
  CHECK(r.alpha0_witness == std::vector<int>{0});
  CHECK(r.beta1 == 1);
  CHECK(*r.alpha1 == 5);
  CHECK(r.beta0_star == 4);
  CHECK(r.beta0_star_witness == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(r.beta0_star_neighborhood == std::vector<int>{0});
}

TEST_CASE("invariants of the clique-plus-pendants instance") {
  const InvariantReport r = compute_invariants(any_of(counterexample_graph<1>({6, 8}).g));
  CHECK(r.beta0 == 4);
  CHECK(r.beta0_star == 2);
  CHECK(r.beta0_star_witness == std::vector<int>{1, 3, 4, 5});
}

TEST_CASE("alpha1 is undefined with an isolated vertex") {
  const InvariantReport r = compute_invariants(any_of(new_graph<1>(3, {{0, 1}})));
  CHECK_FALSE(r.alpha1.has_value());
  CHECK(r.alpha1_witness.empty());
  CHECK(r.beta1 == 1);
  const std::string table = invariants_table(r);
  CHECK(table.find("undefined (isolated vertex)") != std::string::npos);
  CHECK(invariants_json(r)["alpha1"].is_null());
  CHECK(invariants_json(r)["gallai"]["edge_sum"].is_null());
}

TEST_CASE("witness search obeys the oracle bound") {
  const InvariantReport r = compute_invariants(any_of(path_graph<1>(9)), 8);
  CHECK(r.beta0_star == 1);  // matching-based value still present
  CHECK_FALSE(r.beta0_star_witnessed);
  CHECK(r.beta0_star_witness.empty());
  const std::string table = invariants_table(r);
  CHECK(table.find("(matching-based value; no witness)") != std::string::npos);
  CHECK(invariants_json(r)["beta0_star"]["witness"].is_null());
}

TEST_CASE("table layout") {
  const std::string table = invariants_table(compute_invariants(any_of(path_graph<1>(3))));
  CHECK(table.find("order       3") != std::string::npos);
  CHECK(table.find("edges       2") != std::string::npos);
  CHECK(table.find("beta0       2     {0, 2}") != std::string::npos);
  CHECK(table.find("alpha0      1     {1}") != std::string::npos);
  CHECK(table.find("beta1       1     {0-1}") != std::string::npos);
  CHECK(table.find("beta0*      1     {0, 2}  N(S) {1}") != std::string::npos);
  CHECK(table.find("gallai      alpha0 + beta0 = 3 = order") != std::string::npos);
  CHECK(table.find("gallai      alpha1 + beta1 = 3 = order") != std::string::npos);
}

TEST_CASE("json schema") {
  const nlohmann::ordered_json j =
      invariants_json(compute_invariants(any_of(complete_graph<1>(3))));
  CHECK(j["schema_version"] == 1);
  CHECK(j["order"] == 3);
  CHECK(j["edges"] == 3);
  CHECK(j["beta0"]["value"] == 1);
  CHECK(j["beta0"]["witness"] == nlohmann::ordered_json::array({0}));
  CHECK(j["alpha0"]["value"] == 2);
  CHECK(j["beta1"]["value"] == 1);
  CHECK(j["alpha1"]["value"] == 2);
  CHECK(j["beta0_star"]["value"] == 0);
  CHECK(j["beta0_star"]["witness"] == nlohmann::ordered_json::array());
  CHECK(j["gallai"]["vertex_sum"] == 3);
  CHECK(j["gallai"]["edge_sum"] == 3);
}

TEST_CASE("cross-check against reference implementations") {
  SplitMix64 rng(314159);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + int(rng.next_below(7));
    const Graph<1> g = erdos_renyi<1>(n, 0.1 + 0.8 * double(trial % 5) / 4.0, rng.next());
    const oracles::SimpleGraph ref = oracles::make(g);
    const InvariantReport r = compute_invariants(any_of(g));
    CHECK(r.beta0 == oracles::independence_number(ref));
    CHECK(r.alpha0 == oracles::vertex_cover_number(ref));
    CHECK(r.alpha0 + r.beta0 == n);
    if (g.size() <= 14) CHECK(r.beta1 == oracles::matching_number_subsets(ref));
    CHECK(r.beta0_star == oracles::deficiency(ref));
    bool isolated = false;
    for (int v = 0; v < n; ++v) isolated |= g.degree(v) == 0;
    CHECK(r.alpha1.has_value() == !isolated);
    if (r.alpha1) {
      if (g.size() <= 14) CHECK(*r.alpha1 == oracles::edge_cover_number(ref));
      CHECK(*r.alpha1 + r.beta1 == n);
      CHECK(is_edge_cover(g, r.alpha1_witness));
    }
    CHECK(is_independent(g, [&] {
      SmallBitset<1> s;
      for (int v : r.beta0_witness) s.set(v);
      return s;
    }()));
  }
}
