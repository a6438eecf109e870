#include "doctest.h"
#include "oracles.hpp"
#include "zir/errors.hpp"
#include "zir/family.hpp"
#include "zir/graph6.hpp"
#include "zir/report.hpp"
#include "zir/verify.hpp"

using namespace zir;

TEST_CASE("parameter names") {
  for (Param p : all_params()) CHECK(parse_param(param_name(p)) == p);
  CHECK(parse_param_list("all").size() == all_params().size());
  CHECK(parse_param_list("zir,ZIR") == std::vector<Param>{Param::zir, Param::ZIR});
  CHECK_THROWS_AS(parse_param("zeta"), InvalidSpec);
}

TEST_CASE("check names") {
  CHECK(check_catalog().size() >= 20);
  CHECK(is_known_check("chain"));
  CHECK_FALSE(is_known_check("nope"));
  CHECK(parse_check_list("all").size() == check_catalog().size());
  CHECK_THROWS_AS(parse_check_list("chain,nope"), InvalidSpec);
}

TEST_CASE("profiles match brute force") {
  for (const char* text : {"cycle:6", "fig7", "h_rs:2,3", "union(path:3,complete:3)", "star:4"}) {
    const ParamProfile p = parameter_profile(parse_family(text));
    const auto want = oracle::values(p.graph);
    CHECK(p.value(Param::zir) == want.zir);
    CHECK(p.value(Param::Z) == want.Z);
    CHECK(p.value(Param::Zbar) == want.Zbar);
    CHECK(p.value(Param::ZIR) == want.ZIR);
    CHECK(p.value(Param::gamma) == want.gamma);
    CHECK(p.value(Param::gamma2) == want.gamma2);
    CHECK(p.value(Param::alpha) == want.alpha);
    CHECK(p.value(Param::gammaP) == want.gammaP);
    CHECK(p.omissions.empty());
    CHECK(p.spec.has_value());
  }
}

TEST_CASE("profiles past the budget list omissions") {
  ProfileOptions o;
  o.max_order = 10;
  const ParamProfile p = parameter_profile(parse_family("necklace:3"), o);
  CHECK_FALSE(p.value(Param::ZIR).has_value());
  CHECK_FALSE(p.omissions.empty());
}

TEST_CASE("complement-form recognizer") {
  const auto f5 = recognize_zn2_complement_form(fig5_graph());
  REQUIRE(f5.has_value());
  CHECK(f5->cliques == std::vector<int>{3});
  CHECK(f5->bicliques == std::vector<std::pair<int, int>>{{2, 2}});
  CHECK_FALSE(f5->zir_side_conditions);

  CHECK_FALSE(recognize_zn2_complement_form(path_graph(4)).has_value());
  for (int n = 1; n <= 6; ++n) CHECK(recognize_zn2_complement_form(complete_graph(n)).has_value());

  const auto kb = recognize_zn2_complement_form(complement(complete_bipartite_graph(2, 3)));
  REQUIRE(kb.has_value());
  CHECK(kb->bicliques == std::vector<std::pair<int, int>>{{2, 3}});
  CHECK(kb->zir_side_conditions);
  CHECK(kb->to_string() == "K2,3");

  CHECK(is_path(path_graph(5)));
  CHECK_FALSE(is_path(cycle_graph(5)));
  CHECK(is_star(star_graph(4)));
  CHECK(is_clique_plus_isolated(disjoint_union(complete_graph(3), empty_graph(2))));
}

TEST_CASE("checks pass on the family instances") {
  std::vector<std::string> names;
  for (const auto& info : check_catalog()) names.emplace_back(info.name);
  for (const char* text : {"fig3", "fig5", "fig7", "pentasun", "wheel:5", "friendship:3", "h_rs:3,5",
                           "corona(cycle:3,empty:2)", "join(path:4,empty:2)", "necklace:2"}) {
    const ParamProfile p = parameter_profile(parse_family(text));
    for (const auto& r : run_checks(p, names)) {
      INFO(text, " ", r.check, ": ", r.detail);
      CHECK(r.status != CheckStatus::fail);
    }
  }
}

TEST_CASE("family table closed forms") {
  const auto specs = builtin_table_specs();
  const FamilyTable table = family_table(specs, 4);
  CHECK(table.unmatched.empty());
  for (const auto& r : table.rows) {
    INFO(r.spec, " ", param_name(r.param));
    CHECK(r.match);
  }
  CHECK(table.all_match());
  CHECK(table_csv(table) == table_csv(family_table(specs, 1)));

  const auto none = family_table(std::vector<FamilySpec>{parse_family("fig3")});
  CHECK(none.rows.empty());
  CHECK(none.unmatched == std::vector<std::string>{"fig3"});
}

TEST_CASE("survey output does not depend on the thread count") {
  SurveyOptions o;
  o.order = 5;
  o.emit_profiles = true;
  const auto one = survey_lines(survey(o));
  o.threads = 8;
  const auto eight = survey_lines(survey(o));
  CHECK(one == eight);
  const auto r = survey(o);
  CHECK(r.ok());
  CHECK(r.graphs == 1 + 2 + 8 + 64 + 1024);
}

TEST_CASE("survey dedup and budget") {
  SurveyOptions o;
  o.order = 5;
  o.dedup = true;
  o.checks = {"chain"};
  CHECK(survey(o).graphs == 1 + 2 + 4 + 11 + 34);
  o.connected_only = true;
  CHECK(survey(o).graphs == 1 + 1 + 2 + 6 + 21);
  o.order = 7;
  CHECK_THROWS_AS(survey(o), BudgetExceeded);
  o.order = 0;
  CHECK_THROWS_AS(survey(o), InvalidSpec);
}

TEST_CASE("witness JSON") {
  const ParamProfile p = parameter_profile(parse_family("cycle:5"), ProfileOptions{{Param::ZIR}, 15});
  const auto j = profile_json(p, true);
  CHECK(j["params"]["ZIR"]["value"] == 2);
  CHECK(j["params"]["ZIR"]["maximal"] == true);
  CHECK(j["params"]["ZIR"]["certificates"].size() == 2);
  CHECK(profile_json(p, false)["params"]["ZIR"] == 2);
  CHECK(j["graph6"] == to_graph6(cycle_graph(5)));
}

TEST_CASE("characterization examples") {
  auto status = [](const char* spec, const char* check) {
    const ParamProfile p = parameter_profile(parse_family(spec));
    return run_checks(p, std::vector<std::string>{check}).at(0).status;
  };
  const ParamProfile k5 = parameter_profile(parse_family("union(complete:5,empty:2)"));
  CHECK(k5.value(Param::zir) == 6);
  CHECK(k5.value(Param::Zbar) == 6);
  CHECK(status("union(complete:5,empty:2)", "n-1-characterization") == CheckStatus::pass);
  CHECK(status("corona(path:3,empty:2)", "all-leaf") == CheckStatus::pass);
  CHECK(status("friendship:3", "abandon-identity") == CheckStatus::pass);
  CHECK(status("necklace:3", "mindeg3") == CheckStatus::pass);
  CHECK(status("complete:4", "cubic") == CheckStatus::pass);
  CHECK(status("union(path:3,path:3)", "max-degree") == CheckStatus::skipped);
}

TEST_CASE("survey tallies realized parameter tuples") {
  SurveyOptions o;
  o.order = 4;
  o.checks = {"chain"};
  const auto r = survey(o);
  long total = 0;
  for (const auto& t : r.tuples) {
    total += t.count;
    CHECK(t.values[0] <= t.values[1]);
    CHECK(t.values[1] <= t.values[2]);
    CHECK(t.values[2] <= t.values[3]);
  }
  CHECK(total == r.graphs);
  const bool k4 = std::any_of(r.tuples.begin(), r.tuples.end(), [](const RealizedTuple& t) {
    return t.order == 4 && t.values == std::array<int, 4>{3, 3, 3, 3};
  });
  CHECK(k4);
}
