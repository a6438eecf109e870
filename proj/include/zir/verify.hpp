#pragma once

#include <array>
#include <chrono>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zir/domination.hpp"
#include "zir/family.hpp"
#include "zir/irredundance.hpp"

namespace zir {

enum class Param { zir, Z, Zbar, ZIR, gamma, gamma2, alpha, gammaP };

std::span<const Param> all_params();
std::string_view param_name(Param p);
/// Throws InvalidSpec listing the accepted names.
Param parse_param(std::string_view name);
/// Comma-separated list; "all" selects every parameter.
std::vector<Param> parse_param_list(std::string_view text);

struct ParamValue {
  int value = 0;
  VertexSet witness;
  /// Private-fort certificates, for zir and ZIR.
  std::optional<ZirWitness> certified;
};

struct ParamProfile {
  ParamProfile(std::string id, Graph g) : id(std::move(id)), graph(std::move(g)) {}

  std::string id;
  std::optional<FamilySpec> spec;
  Graph graph;
  int n = 0;
  int min_degree = 0;
  int max_degree = 0;
  bool has_edge = false;
  bool connected = false;
  bool isolated_free = false;
  std::map<Param, ParamValue> values;
  /// One line per parameter that could not be computed, with the reason.
  std::vector<std::string> omissions;

  std::optional<int> value(Param p) const;
  const ParamValue* find(Param p) const;
};

struct ProfileOptions {
  std::vector<Param> params{all_params().begin(), all_params().end()};
  int max_order = 15;
};

/// Computes the requested parameters. A parameter whose search exceeds the
/// budget is listed in `omissions` instead of failing the whole profile.
ParamProfile parameter_profile(const Graph& g, const ProfileOptions& options = {}, std::string id = {});
ParamProfile parameter_profile(const FamilySpec& spec, const ProfileOptions& options = {});

// ---------------------------------------------------------------------------
// Checks

enum class CheckStatus { pass, fail, skipped, finding };
std::string_view status_name(CheckStatus s);

struct CheckReport {
  std::string check;
  std::string scope;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  /// graph6 of the offending graph; set for fail and finding.
  std::optional<std::string> counterexample;
};

enum class CheckKind { bound, characterization, subset, open_question };

struct CheckInfo {
  std::string_view name;
  CheckKind kind;
  std::string_view summary;
};

std::span<const CheckInfo> check_catalog();
bool is_known_check(std::string_view name);
/// Comma-separated check names, or "all". Throws InvalidSpec on unknown names.
std::vector<std::string> parse_check_list(std::string_view text);

/// Subset-table checks enumerate all 2^n vertex sets.
inline constexpr int kTableMaxOrder = 12;

/// Runs the named checks against one profile. Checks whose hypotheses do not
/// hold come back as skipped, naming the failed hypothesis.
std::vector<CheckReport> run_checks(const ParamProfile& p, std::span<const std::string> names);
/// Every inequality and the open-question scans.
std::vector<CheckReport> check_bounds(const ParamProfile& p);
/// Every characterization and exhaustive subset check.
std::vector<CheckReport> check_characterizations(const ParamProfile& p);

// ---------------------------------------------------------------------------
// Graphs with order-n, n-1 and n-2 forcing numbers

/// Complement of g written as (K_{s_1} + ... + K_{s_t} + K_{q_1,p_1} + ... +
/// K_{q_k,p_k}) joined with K_r, normalized: s_i >= 3 descending, p_i >= q_i,
/// q descending, all q = 0 pieces merged into one.
struct ComplementForm {
  std::vector<int> cliques;
  std::vector<std::pair<int, int>> bicliques;  // (q, p)
  int universal = 0;
  /// t = 0, k >= 1, and q_1 >= 2 or (q_1 = 1 and k >= 2).
  bool zir_side_conditions = false;

  std::string to_string() const;
  bool operator==(const ComplementForm&) const = default;
};

std::optional<ComplementForm> recognize_zn2_complement_form(const Graph& g);

/// g is K_m plus isolated vertices with m >= 2.
bool is_clique_plus_isolated(const Graph& g);
bool is_path(const Graph& g);
bool is_star(const Graph& g);

// ---------------------------------------------------------------------------
// Family table

struct ExpectedValue {
  Param param;
  int value;
  std::string source;
};

/// Closed-form values known for the spec's family at its parameters. Empty if
/// nothing is known or the parameters fall outside the formulas' ranges.
std::vector<ExpectedValue> expected_values(const FamilySpec& spec);

struct TableRow {
  std::string spec;
  int n = 0;
  Param param = Param::zir;
  int expected = 0;
  std::optional<int> computed;
  std::string source;
  bool match = false;
};

struct FamilyTable {
  std::vector<TableRow> rows;
  /// Specs for which no closed form applies.
  std::vector<std::string> unmatched;
  bool all_match() const;
};

/// Instantiations of every closed form covered by the regression suite.
std::vector<FamilySpec> builtin_table_specs();

FamilyTable family_table(std::span<const FamilySpec> specs, int threads = 1, int max_order = 15);

// ---------------------------------------------------------------------------
// Exhaustive survey

struct SurveyOptions {
  int order = 6;
  /// Empty selects every check.
  std::vector<std::string> checks;
  bool connected_only = false;
  bool dedup = false;
  int threads = 1;
  bool emit_profiles = false;
  /// Surveys above this order are refused; 7 is the hard ceiling.
  int max_order = 6;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct CheckTally {
  std::string check;
  long pass = 0;
  long fail = 0;
  long skipped = 0;
  long findings = 0;
};

struct LeaderboardEntry {
  int order = 0;
  int min_upper_zir = 0;
  std::string graph6;
  long attained_by = 0;
};

/// One realized (zir, Z, Zbar, ZIR) combination.
struct RealizedTuple {
  int order = 0;
  std::array<int, 4> values{};
  long count = 0;
  std::string first_graph6;
};

struct SurveyReport {
  long graphs = 0;
  std::vector<CheckTally> tallies;
  std::vector<CheckReport> failures;
  std::vector<CheckReport> findings;
  /// Lowest ZIR among connected surveyed graphs of each order.
  std::vector<LeaderboardEntry> leaderboard;
  /// Distinct (zir, Z, Zbar, ZIR) per order, ascending.
  std::vector<RealizedTuple> tuples;
  /// One JSON object per surveyed graph when emit_profiles is set.
  std::vector<std::string> profile_lines;

  bool ok() const { return failures.empty(); }
};

/// Every labeled graph of order 1..options.order. Output does not depend on
/// the thread count. Throws BudgetExceeded above options.max_order or past
/// the deadline.
SurveyReport survey(const SurveyOptions& options);

}  // namespace zir
