#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zir/errors.hpp"
#include "zir/family.hpp"
#include "zir/forcing.hpp"

using namespace zir;

namespace {

VertexSet vs(std::initializer_list<int> v) { return VertexSet::of(v); }

/// Small corpus: every connected graph on up to 5 vertices plus random ones on 6..8.
std::vector<Graph> corpus() {
  std::vector<Graph> out;
  for (int n = 1; n <= 5; ++n) {
    enumerate_labeled_graphs(n, true, [&](const Graph& g, std::uint64_t) { return out.push_back(g), true; });
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 120; ++i) out.push_back(oracle::random_graph(6 + i % 3, 0.25 + 0.05 * (i % 8), rng));
  return out;
}

}  // namespace

TEST_CASE("closure examples") {
  CHECK(closure(path_graph(4), vs({0})) == VertexSet::first(4));
  CHECK(closure(cycle_graph(4), vs({0})) == vs({0}));
  CHECK(closure(star_graph(3), vs({0})) == vs({0}));
}

TEST_CASE("closure chronicle records unique-white-neighbor forces") {
  const Graph g = h_rs_graph(3, 5);
  std::vector<ForceStep> steps;
  const VertexSet start = vs({1, 2, 4});
  const VertexSet result = closure(g, start, steps);
  CHECK(result == closure(g, start));
  VertexSet blue = start;
  for (const auto& s : steps) {
    CHECK(blue.contains(s.forcer));
    CHECK((g.neighbors(s.forcer) - blue) == VertexSet::single(s.forced));
    blue.insert(s.forced);
  }
  CHECK(blue == result);
}

TEST_CASE("closure is extensive, monotone and idempotent") {
  std::mt19937_64 rng(5);
  for (const Graph& g : corpus()) {
    const std::uint64_t full = g.vertices().bits();
    for (int t = 0; t < 8; ++t) {
      const VertexSet b{rng() & full};
      const VertexSet bigger = b | VertexSet{rng() & full};
      const VertexSet cb = closure(g, b);
      CHECK(b.is_subset_of(cb));
      CHECK(cb.is_subset_of(closure(g, bigger)));
      CHECK(closure(g, cb) == cb);
    }
  }
}

TEST_CASE("zero forcing sets and forts") {
  const Graph c5 = cycle_graph(5);
  CHECK(is_zero_forcing_set(c5, vs({0, 1})));
  CHECK_FALSE(is_zero_forcing_set(c5, vs({0, 2})));
  CHECK(is_zero_forcing_set(fig6_graph(), fig6_graph().vertices()));
  CHECK_FALSE(is_zero_forcing_set(complete_bipartite_graph(2, 3), vs({0, 1})));

  CHECK(is_fort(c5, vs({0, 1, 3})));
  CHECK_FALSE(is_fort(c5, vs({0, 1, 2})));
  CHECK(is_fort(fig6_graph(), fig6_graph().vertices()));
  CHECK(is_fort(friendship_graph(3), vs({1, 2})));
  CHECK_FALSE(is_fort(c5, VertexSet{}));
  CHECK(make_fort(c5, vs({0, 1, 3})).has_value());
  CHECK_FALSE(make_fort(c5, vs({0, 1, 2})).has_value());
}

TEST_CASE("max fort avoiding a set") {
  CHECK_FALSE(max_fort_avoiding(path_graph(4), vs({0})).has_value());
  CHECK(max_fort_avoiding(cycle_graph(5), vs({0}))->members() == vs({1, 2, 3, 4}));
  const Graph fr2 = friendship_graph(2);
  CHECK(max_fort_avoiding(fr2, vs({0}))->members() == fr2.vertices().without(0));
}

TEST_CASE("forts, zero forcing and fort avoidance agree with brute force") {
  for (const Graph& g : corpus()) {
    const oracle::Brute b(g);
    const auto forts = b.forts();
    for (oracle::Mask s = 0; s <= b.all(); ++s) {
      const VertexSet set{s};
      REQUIRE(is_fort(g, set) == b.fort(s));
      const bool hits_all = std::all_of(forts.begin(), forts.end(), [&](oracle::Mask f) { return (f & s) != 0; });
      REQUIRE(is_zero_forcing_set(g, set) == b.forces_all(s));
      REQUIRE(is_zero_forcing_set(g, set) == hits_all);
      const auto avoid = max_fort_avoiding(g, set);
      for (oracle::Mask f : forts) {
        if ((f & s) == 0) REQUIRE((avoid && (f & ~avoid->members().bits()) == 0));
      }
      if (avoid) REQUIRE(b.fort(static_cast<oracle::Mask>(avoid->members().bits())));
      const auto within = max_fort_within(g, set);
      oracle::Mask union_inside = 0;
      for (oracle::Mask f : forts) {
        if ((f & ~s) == 0) union_inside |= f;
      }
      REQUIRE((within ? within->members().bits() : 0) == union_inside);
    }
  }
}

TEST_CASE("a union of forts is a fort") {
  for (const Graph& g : corpus()) {
    if (g.order() > 6) continue;
    const oracle::Brute b(g);
    const auto forts = b.forts();
    for (oracle::Mask f : forts) {
      for (oracle::Mask h : forts) REQUIRE(b.fort(f | h));
    }
  }
}

TEST_CASE("minimal forts agree with brute force") {
  CHECK(enumerate_minimal_forts(cycle_graph(5)).size() == 5);
  for (const auto& f : enumerate_minimal_forts(cycle_graph(5))) CHECK(f.members().size() == 3);
  const auto p3 = enumerate_minimal_forts(path_graph(3));
  REQUIRE(p3.size() == 1);
  CHECK(p3[0].members() == vs({0, 2}));
  const auto fr2 = enumerate_minimal_forts(friendship_graph(2));
  CHECK(fr2.size() == 6);
  CHECK(fr2[0].members() == vs({1, 2}));
  CHECK(fr2[1].members() == vs({3, 4}));

  for (const Graph& g : corpus()) {
    const oracle::Brute b(g);
    std::vector<oracle::Mask> got;
    for (const auto& f : enumerate_minimal_forts(g)) got.push_back(static_cast<oracle::Mask>(f.members().bits()));
    auto want = b.minimal_forts();
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    REQUIRE(got == want);
    const auto fs = b.forts();
    for (oracle::Mask s = 0; s <= b.all(); ++s) {
      const bool hits_minimal = std::all_of(want.begin(), want.end(), [&](oracle::Mask f) { return (f & s) != 0; });
      REQUIRE(hits_minimal == b.forces_all(s));
    }
  }
  CHECK_THROWS_AS(enumerate_minimal_forts(empty_graph(21)), BudgetExceeded);
}

TEST_CASE("Z and upper Z agree with brute force") {
  CHECK(zero_forcing_number(cycle_graph(7)).value == 2);
  CHECK(zero_forcing_number(complete_graph(6)).value == 5);
  CHECK(zero_forcing_number(h_rs_graph(3, 5)).value == 3);
  CHECK(upper_zero_forcing_number(path_graph(6)).value == 2);
  CHECK(upper_zero_forcing_number(necklace_graph(3)).value == 5);
  CHECK(upper_zero_forcing_number(h_rs_graph(3, 5)).value == 4);
  CHECK(upper_zero_forcing_number(complete_graph(6)).value == 5);

  for (const Graph& g : corpus()) {
    const auto want = oracle::values(g);
    const auto z = zero_forcing_number(g);
    const auto zbar = upper_zero_forcing_number(g);
    REQUIRE(z.value == want.Z);
    REQUIRE(zbar.value == want.Zbar);
    CHECK(is_zero_forcing_set(g, z.witness));
    CHECK(z.witness.size() == z.value);
    CHECK(is_minimal_zfs(g, zbar.witness));
    CHECK(zbar.witness.size() == zbar.value);
    CHECK(z.value >= g.min_degree());
  }
}

TEST_CASE("minimal zero forcing sets") {
  CHECK(is_minimal_zfs(h_rs_graph(3, 5), vs({1, 2, 4})));
  CHECK_FALSE(is_minimal_zfs(complete_graph(3), VertexSet::first(3)));
  CHECK_FALSE(is_minimal_zfs(path_graph(5), vs({0, 4})));
}

TEST_CASE("minimal zero forcing sets meet each twin class in all but one vertex") {
  for (const Graph& g : corpus()) {
    const oracle::Brute b(g);
    const auto classes = twin_classes(g);
    for (oracle::Mask s = 0; s <= b.all(); ++s) {
      if (!b.forces_all(s)) continue;
      for (VertexSet c : classes) REQUIRE((c & VertexSet{s}).size() >= c.size() - 1);
    }
  }
}

TEST_CASE("Z-irrelevant vertices") {
  CHECK(is_z_irrelevant(path_graph(3), 1));
  CHECK_FALSE(is_z_irrelevant(path_graph(3), 0));
  for (int v = 0; v < 5; ++v) CHECK_FALSE(is_z_irrelevant(cycle_graph(5), v));
  for (int v = 0; v < 4; ++v) CHECK_FALSE(is_z_irrelevant(complete_graph(4), v));
  // Agreement with "in no minimal zero forcing set", and every member of a
  // minimal zero forcing set lies in some minimal fort.
  for (const Graph& g : corpus()) {
    if (g.order() > 6) continue;
    const oracle::Brute b(g);
    oracle::Mask in_minimal_zfs = 0;
    for (oracle::Mask s = 0; s <= b.all(); ++s) {
      if (is_minimal_zfs(g, VertexSet{s})) in_minimal_zfs |= s;
    }
    for (int v = 0; v < g.order(); ++v) REQUIRE(is_z_irrelevant(g, v) == !b.in(in_minimal_zfs, v));
  }
}

TEST_CASE("search budgets") {
  CHECK_THROWS_AS(zero_forcing_number(empty_graph(30)), BudgetExceeded);
  CHECK(zero_forcing_number(path_graph(30), SearchLimits{30}).value == 1);
}
