#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zir/domination.hpp"
#include "zir/errors.hpp"
#include "zir/family.hpp"
#include "zir/irredundance.hpp"

using namespace zir;

namespace {

VertexSet vs(std::initializer_list<int> v) { return VertexSet::of(v); }
oracle::Mask mask(VertexSet s) { return static_cast<oracle::Mask>(s.bits()); }

std::vector<Graph> corpus() {
  std::vector<Graph> out;
  for (int n = 1; n <= 5; ++n) {
    enumerate_labeled_graphs(n, false, [&](const Graph& g, std::uint64_t) { return out.push_back(g), true; });
  }
  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) out.push_back(oracle::random_graph(6 + i % 3, 0.2 + 0.1 * (i % 6), rng));
  return out;
}

void check_witness(const Graph& g, const ZirWitness& w) {
  const oracle::Brute b(g);
  REQUIRE(w.certificates.size() == static_cast<std::size_t>(w.set.size()));
  for (const auto& c : w.certificates) {
    CHECK(w.set.contains(c.owner));
    CHECK(c.relative_to == w.set);
    CHECK(b.fort(mask(c.fort)));
    CHECK((c.fort & w.set) == VertexSet::single(c.owner));
  }
}

}  // namespace

TEST_CASE("private fort examples") {
  // K_{2,3}: s omits one vertex from each side.
  const Graph k23 = complete_bipartite_graph(2, 3);
  const auto cert = has_private_fort(k23, vs({0, 2, 3}), 0);
  REQUIRE(cert.has_value());
  CHECK(vs({0, 1}).is_subset_of(cert->fort));
  CHECK(is_fort(k23, vs({0, 1})));

  CHECK(has_private_fort(fig7_graph(), vs({2, 3}), 2).has_value());
  const Graph c6 = cycle_graph(6);
  CHECK(has_private_fort(c6, vs({4}), 4)->fort == c6.vertices());
  CHECK_THROWS_AS(has_private_fort(c6, vs({1}), 2), PreconditionError);
}

TEST_CASE("minimal private fort examples") {
  const auto c5 = minimal_private_fort(cycle_graph(5), vs({0, 2}), 0);
  REQUIRE(c5.has_value());
  CHECK(c5->members().size() == 3);
  CHECK(c5->members().contains(0));
  CHECK_FALSE(c5->members().contains(2));

  CHECK(minimal_private_fort(friendship_graph(2), vs({1, 3}), 1)->members() == vs({1, 2}));
  const Graph k13 = star_graph(3);
  CHECK(minimal_private_fort(k13, vs({0}), 0)->members() == k13.vertices());
  CHECK_FALSE(minimal_private_fort(path_graph(3), vs({0, 1}), 1).has_value());
}

TEST_CASE("private fort test agrees with brute force; minimal private forts are minimal") {
  for (const Graph& g : corpus()) {
    const oracle::Brute b(g);
    const oracle::Tables t(b);
    for (oracle::Mask s = 1; s <= b.all(); ++s) {
      for (int x = 0; x < b.n; ++x) {
        if (!b.in(s, x)) continue;
        const auto cert = has_private_fort(g, VertexSet{s}, x);
        REQUIRE(cert.has_value() == t.private_fort(s, x));
        if (!cert) continue;
        CHECK(b.fort(mask(cert->fort)));
        CHECK((mask(cert->fort) & s) == (oracle::Mask{1} << x));
        // Every private fort of x sits inside the returned one.
        for (oracle::Mask f : t.fort_list) {
          if ((f & s) == (oracle::Mask{1} << x)) REQUIRE((f & ~mask(cert->fort)) == 0);
        }
        if (g.order() > 6) continue;
        const auto m = minimal_private_fort(g, VertexSet{s}, x);
        REQUIRE(m.has_value());
        const oracle::Mask mm = mask(m->members());
        REQUIRE(b.fort(mm));
        REQUIRE((mm & s) == (oracle::Mask{1} << x));
        for (oracle::Mask f : t.fort_list) {
          if (f != mm && (f & ~mm) == 0) REQUIRE_FALSE(b.in(f, x));
        }
      }
    }
  }
}

TEST_CASE("ZIr-set predicates") {
  CHECK(is_zir_set(cycle_graph(5), VertexSet{}));
  // N[v] inside s for a non-isolated v.
  CHECK_FALSE(is_zir_set(path_graph(4), vs({0, 1, 2})));
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) CHECK(is_maximal_zir_set(cycle_graph(5), vs({a, b})));
  }
  CHECK(is_maximal_zir_set(h_rs_graph(3, 5), vs({0, 4})));
  CHECK_FALSE(is_maximal_zir_set(path_graph(5), vs({1})));
  CHECK(is_zir_set(path_graph(5), vs({1, 3})));
  CHECK(is_maximal_zir_set(fig7_graph(), vs({2, 3})));
  CHECK_FALSE(certify(path_graph(4), vs({0, 1, 2})).has_value());
  check_witness(h_rs_graph(3, 5), *certify(h_rs_graph(3, 5), vs({0, 4})));
}

TEST_CASE("any min-degree many vertices form a ZIr-set") {
  for (const Graph& g : corpus()) {
    const int d = g.min_degree();
    for_each_subset_of_size(g.vertices(), d, [&](VertexSet s) {
      REQUIRE(is_zir_set(g, s));
      return true;
    });
  }
}

TEST_CASE("ZIr-set tables agree with brute force") {
  for (const Graph& g : corpus()) {
    const oracle::Brute b(g);
    const oracle::Tables t(b);
    for (oracle::Mask s = 0; s <= b.all(); ++s) {
      const VertexSet set{s};
      REQUIRE(is_zir_set(g, set) == static_cast<bool>(t.zir[s]));
      REQUIRE(is_maximal_zir_set(g, set) == static_cast<bool>(t.maximal[s]));
      // Heredity.
      if (t.zir[s]) {
        for (int x : set) REQUIRE(t.zir[s & ~(oracle::Mask{1} << x)]);
      }
      // Minimal zero forcing sets are exactly the maximal ZIr-sets that force.
      REQUIRE(is_minimal_zfs(g, set) == (t.maximal[s] && b.forces_all(s)));
      // Complements of maximal ZIr-sets dominate when nothing is isolated.
      if (t.maximal[s] && !g.has_isolated_vertex()) REQUIRE(b.dominating(b.all() & ~s, 1));
    }
  }
}

TEST_CASE("zir and ZIR examples") {
  CHECK(upper_zir_number(cycle_graph(6)).value == 3);
  CHECK(upper_zir_number(necklace_graph(3)).value == 6);
  CHECK(upper_zir_number(wheel_graph(5)).value == 3);
  CHECK(upper_zir_number(empty_graph(4)).value == 4);
  CHECK(lower_zir_number(empty_graph(4)).value == 4);
  for (int n = 2; n <= 8; ++n) CHECK(lower_zir_number(path_graph(n)).value == 1);
  for (int p = 2; p <= 6; ++p) CHECK(lower_zir_number(star_graph(p)).value == 1);
  CHECK(lower_zir_number(pentasun_graph()).value == 3);
  CHECK(lower_zir_number(h_rs_graph(3, 5)).value == 2);
}

TEST_CASE("zir and ZIR agree with brute force and carry valid certificates") {
  for (const Graph& g : corpus()) {
    const auto want = oracle::values(g);
    const auto lo = lower_zir_number(g);
    const auto hi = upper_zir_number(g);
    REQUIRE(lo.value == want.zir);
    REQUIRE(hi.value == want.ZIR);
    CHECK(lo.witness.maximal);
    CHECK(hi.witness.maximal);
    CHECK(lo.witness.set.size() == lo.value);
    CHECK(hi.witness.set.size() == hi.value);
    check_witness(g, lo.witness);
    check_witness(g, hi.witness);
    // Chain and the degree bounds.
    CHECK(lo.value <= want.Z);
    CHECK(want.Z <= want.Zbar);
    CHECK(want.Zbar <= hi.value);
    CHECK(g.min_degree() <= lo.value);
    if (g.has_edge()) CHECK(hi.value <= g.order() - 1);
  }
}

TEST_CASE("certificate prefix bound") {
  for (const Graph& g : corpus()) {
    const auto w = upper_zir_number(g).witness;
    VertexSet covered;
    int k = 0;
    for (const auto& c : w.certificates) {
      covered |= c.fort;
      ++k;
      REQUIRE(w.set.size() <= g.order() - covered.size() + k);
    }
  }
}

TEST_CASE("zir and ZIR add over disjoint unions") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    const Graph a = oracle::random_graph(2 + i % 4, 0.5, rng);
    const Graph b = oracle::random_graph(2 + (i / 4) % 4, 0.4, rng);
    const Graph u = disjoint_union(a, b);
    CHECK(lower_zir_number(u).value == lower_zir_number(a).value + lower_zir_number(b).value);
    CHECK(upper_zir_number(u).value == upper_zir_number(a).value + upper_zir_number(b).value);
  }
}

TEST_CASE("ZIr-sets of a given size") {
  for (const Graph& g : corpus()) {
    if (g.order() > 6) continue;
    const oracle::Brute b(g);
    const oracle::Tables t(b);
    for (int k = 0; k <= g.order(); ++k) {
      std::vector<VertexSet> want;
      for_each_subset_of_size(g.vertices(), k, [&](VertexSet s) {
        if (t.zir[mask(s)]) want.push_back(s);
        return true;
      });
      REQUIRE(zir_sets_of_size(g, k) == want);
    }
  }
}

TEST_CASE("abandoned forts") {
  const auto f3 = abandons_fort(fig3_graph(), vs({0, 3, 4}));
  REQUIRE(f3.has_value());
  CHECK(vs({1, 2}).is_subset_of(f3->members()));

  const Graph pj = join(path_graph(4), empty_graph(2));
  const auto fj = abandons_fort(pj, vs({0, 1, 2, 3}));
  REQUIRE(fj.has_value());
  CHECK(fj->members() == vs({4, 5}));

  const Graph h = h_rs_graph(3, 5);
  CHECK_FALSE(abandons_fort(h, vs({1, 2, 4})).has_value());
  CHECK_THROWS_AS(abandons_fort(path_graph(5), vs({1})), PreconditionError);
}

TEST_CASE("graphs that abandon a fort") {
  for (int k = 2; k <= 3; ++k) {
    const auto r = graph_abandons_fort(friendship_graph(k));
    CHECK_FALSE(r.abandons);
    CHECK_FALSE(r.fort.has_value());
  }
  for (const Graph& g : {wheel_graph(5), fig3_graph(), join(path_graph(4), empty_graph(2))}) {
    const auto r = graph_abandons_fort(g);
    REQUIRE(r.abandons);
    REQUIRE(r.upper_set.has_value());
    REQUIRE(r.fort.has_value());
    const oracle::Brute b(g);
    const oracle::Tables t(b);
    const oracle::Mask s = mask(r.upper_set->set);
    CHECK(t.maximal[s]);
    CHECK(r.upper_set->set.size() == oracle::values(g).ZIR);
    CHECK(b.fort(mask(r.fort->members())));
    CHECK((mask(r.fort->members()) & s) == 0);
    check_witness(g, *r.upper_set);
  }
}

TEST_CASE("ZIR equals upper Z when no upper ZIR set abandons a fort") {
  for (const Graph& g : corpus()) {
    if (g.order() > 7) continue;
    const auto r = graph_abandons_fort(g);
    const auto want = oracle::values(g);
    if (!r.abandons) REQUIRE(want.ZIR == want.Zbar);
  }
}
