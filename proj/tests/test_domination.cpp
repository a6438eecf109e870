#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zir/domination.hpp"
#include "zir/errors.hpp"
#include "zir/family.hpp"

using namespace zir;

TEST_CASE("domination examples") {
  CHECK(k_domination_number(cycle_graph(6), 1).value == 2);
  CHECK(k_domination_number(cycle_graph(7), 1).value == 3);
  CHECK(k_domination_number(h_chain_graph(3), 2).value == 9);
  CHECK(k_domination_number(fig5_graph(), 2).value == 3);
  CHECK(k_domination_number(complete_graph(5), 1).value == 1);
  CHECK(k_domination_number(empty_graph(3), 2).value == 3);
  CHECK_THROWS_AS(k_domination_number(cycle_graph(5), 0), InvalidSpec);

  const auto d = k_domination_number(path_graph(5), 2);
  CHECK(d.k == 2);
  CHECK(is_k_dominating(path_graph(5), d.witness, 2));
}

TEST_CASE("independence and power domination examples") {
  for (int r = 3; r <= 5; ++r) CHECK(independence_number(corona(cycle_graph(r), empty_graph(2))).value == 2 * r);
  CHECK(independence_number(complete_graph(5)).value == 1);
  CHECK(independence_number(cycle_graph(7)).value == 3);
  CHECK(power_domination_number(fig7_graph()).value == 2);
  for (int n = 3; n <= 9; ++n) CHECK(power_domination_number(cycle_graph(n)).value == 1);
  CHECK_FALSE(is_power_dominating(fig7_graph(), VertexSet::of({2, 3})));
  CHECK(is_power_dominating(fig7_graph(), power_domination_number(fig7_graph()).witness));
}

TEST_CASE("domination parameters agree with brute force") {
  std::vector<Graph> graphs;
  for (int n = 1; n <= 5; ++n) {
    enumerate_labeled_graphs(n, false, [&](const Graph& g, std::uint64_t) { return graphs.push_back(g), true; });
  }
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) graphs.push_back(oracle::random_graph(6 + i % 5, 0.15 + 0.1 * (i % 7), rng));
  for (const Graph& g : graphs) {
    const auto want = oracle::values(g);
    const auto g1 = k_domination_number(g, 1);
    const auto g2 = k_domination_number(g, 2);
    const auto a = independence_number(g);
    const auto p = power_domination_number(g);
    REQUIRE(g1.value == want.gamma);
    REQUIRE(g2.value == want.gamma2);
    REQUIRE(a.value == want.alpha);
    REQUIRE(p.value == want.gammaP);
    CHECK(is_k_dominating(g, g1.witness, 1));
    CHECK(is_k_dominating(g, g2.witness, 2));
    CHECK(is_independent(g, a.witness));
    CHECK(is_power_dominating(g, p.witness));
    CHECK(g1.witness.size() == g1.value);
    CHECK(g2.witness.size() == g2.value);
    CHECK(a.witness.size() == a.value);
    CHECK(p.witness.size() == p.value);
  }
}
