#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "splitgraph/deficiency.hpp"

using namespace splitgraph;

TEST_CASE("deficiency values, frozen") {
  // paths alternate: odd orders leave one endpoint uncovered
  for (int n = 1; n <= 9; ++n)
    CHECK(beta0_star_fast(path_graph<1>(n)) == n % 2);
  for (int n = 2; n <= 7; ++n)
    CHECK(beta0_star_fast(complete_graph<1>(n)) == 0);
  for (int leaves = 1; leaves <= 6; ++leaves)
    CHECK(beta0_star_fast(star_graph<1>(leaves)) == leaves - 1);
  CHECK(beta0_star_fast(Graph<1>(5)) == 5);  // edgeless
  CHECK(beta0_star_fast(cycle_graph<1>(6)) == 0);
  CHECK(beta0_star_fast(cycle_graph<1>(7)) == 0);
}

TEST_CASE("certificates carry the lex-min optimal set") {
  const DeficiencyCertificate<1> p3 = beta0_star_bruteforce(path_graph<1>(3));
  CHECK(p3.value == 1);
  CHECK(p3.s.to_vector() == std::vector<int>{0, 2});
  CHECK(p3.n_of_s.to_vector() == std::vector<int>{1});

  // K_n: the empty set ties every single vertex at value 0 and sorts first
  const DeficiencyCertificate<1> k4 = beta0_star_bruteforce(complete_graph<1>(4));
  CHECK(k4.value == 0);
  CHECK(k4.s.none());
  CHECK(k4.n_of_s.none());

  // clique K3 plus pendants {3,4,5} at vertex 0: value 2, and {1,3,4,5}
  // beats {3,4,5} in the reporting order
  const DeficiencyCertificate<1> gk = beta0_star_bruteforce(counterexample_graph<1>({6, 8}).g);
  CHECK(gk.value == 2);
  CHECK(gk.s.to_vector() == std::vector<int>{1, 3, 4, 5});
  CHECK(gk.n_of_s.to_vector() == std::vector<int>{0, 2});

  const DeficiencyCertificate<1> star = beta0_star_bruteforce(star_graph<1>(4));
  CHECK(star.value == 3);
  CHECK(star.s.to_vector() == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("certificate properties on random graphs") {
  SplitMix64 rng(4096);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + int(rng.next_below(9));
    const Graph<1> g = erdos_renyi<1>(n, 0.1 + 0.8 * double(trial % 4) / 3.0, rng.next());
    const DeficiencyCertificate<1> cert = beta0_star_bruteforce(g);
    CHECK(is_independent(g, cert.s));
    CHECK(neighborhood(g, cert.s) == cert.n_of_s);
    CHECK(cert.value == cert.s.count() - cert.n_of_s.count());
    CHECK(cert.value == oracles::deficiency(oracles::make(g)));
  }
}

// The matching-based value must agree with exhaustive search on every graph,
// connected or not: all edge subsets up to order six.
TEST_CASE("matching-based value equals enumeration everywhere") {
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t masks = 1ULL << pair_count(n);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      const Graph<1> g = graph_from_mask<1>(n, mask);
      CHECK(beta0_star_fast(g) == beta0_star_bruteforce(g).value);
    }
  }
}

TEST_CASE("oracle refuses above its bound") {
  CHECK_THROWS_AS(beta0_star_bruteforce(Graph<1>(25)), BoundError);
  CHECK_THROWS_AS(beta0_star_bruteforce(Graph<1>(10), 9), BoundError);
  CHECK(beta0_star_bruteforce(Graph<1>(10), 10).value == 10);
  try {
    beta0_star_bruteforce(Graph<1>(25));
  } catch (const BoundError& e) {
    CHECK(std::string(e.what()).find("use beta0_star_fast") != std::string::npos);
  }
}

TEST_CASE("hall condition") {
  CHECK(hall_condition(complete_graph<1>(4)));
  CHECK(hall_condition(cycle_graph<1>(6)));
  CHECK(hall_condition(path_graph<1>(2)));
  CHECK_FALSE(hall_condition(path_graph<1>(3)));
  CHECK_FALSE(hall_condition(star_graph<1>(3)));
  CHECK_FALSE(hall_condition(Graph<1>(1)));
}

TEST_CASE("positive deficiency without a large independent set") {
  const ObservationIvWitness w = observation_iv_witness();
  CHECK(w.g.order() == 7);
  CHECK(w.hub == 0);
  CHECK(w.pendants.to_vector() == std::vector<int>{5, 6});
  CHECK(is_connected(w.g));
  // 2*beta0 <= n, so the converse direction would demand beta0_star = 0
  CHECK(w.beta0 == 3);
  CHECK(2 * w.beta0 <= w.g.order());
  CHECK(w.beta0_star == 1);
  CHECK(beta0_star_bruteforce(w.g).s.to_vector() == std::vector<int>{5, 6});
}
