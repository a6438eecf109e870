#include "zir/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "zir/errors.hpp"
#include "zir/graph6.hpp"
#include "zir/io.hpp"
#include "zir/report.hpp"

namespace zir {

namespace {

using Clock = std::chrono::steady_clock;

struct Source {
  std::string graph6;
  std::string file;
  std::string family;
  std::string edges;

  void attach(CLI::App* cmd, bool allow_edges) {
    auto* g = cmd->add_option("--graph6", graph6, "graph6 string");
    auto* f = cmd->add_option("--file", file, "file with one graph6 string per line");
    auto* m = cmd->add_option("--family", family, "family expression, e.g. corona(cycle:4,empty:2)");
    g->excludes(f, m);
    f->excludes(m);
    if (allow_edges) {
      auto* e = cmd->add_option("--edges", edges, "edge-list file: order line, then 'u v' lines");
      e->excludes(g, f, m);
    }
  }

  std::vector<NamedGraph> load() const {
    if (!graph6.empty()) return {{graph6, parse_graph6(graph6)}};
    if (!family.empty()) {
      const auto spec = parse_family(family);
      return {{spec.to_string(), generate(spec)}};
    }
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw ParseError("cannot open " + file);
      return read_graph6_lines(in, file);
    }
    if (!edges.empty()) {
      std::ifstream in(edges);
      if (!in) throw ParseError("cannot open " + edges);
      std::stringstream buf;
      buf << in.rdbuf();
      return {{edges, parse_edge_list(buf.str())}};
    }
    throw CLI::ValidationError("a graph source is required (--graph6, --file or --family)");
  }

  std::optional<FamilySpec> spec() const {
    if (family.empty()) return std::nullopt;
    return parse_family(family);
  }
};

struct Budget {
  int max_order = 15;
  double time_limit = 0;

  std::optional<Clock::time_point> deadline() const {
    if (time_limit <= 0) return std::nullopt;
    return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(time_limit));
  }
};

void check_deadline(const std::optional<Clock::time_point>& d) {
  if (d && Clock::now() > *d) throw BudgetExceeded("time limit reached");
}

int compute_cmd(const Source& src, const std::string& params_text, bool witness, const std::string& format,
                const std::string& checks_text, const Budget& budget, std::ostream& out) {
  ProfileOptions options;
  options.params = parse_param_list(params_text);
  options.max_order = budget.max_order;
  const auto checks = checks_text.empty() ? std::vector<std::string>{} : parse_check_list(checks_text);
  const auto deadline = budget.deadline();
  std::vector<ParamProfile> profiles;
  bool failed = false;
  const auto spec = src.spec();
  for (const auto& ng : src.load()) {
    check_deadline(deadline);
    ParamProfile p = parameter_profile(ng.graph, options, ng.id);
    p.spec = spec;
    if (format == "json") {
      auto j = profile_json(p, witness);
      if (!checks.empty()) {
        auto arr = nlohmann::json::array();
        for (const auto& r : run_checks(p, checks)) {
          failed = failed || r.status == CheckStatus::fail;
          arr.push_back(report_json(r));
        }
        j["checks"] = arr;
      }
      out << j.dump() << '\n';
    } else {
      if (!checks.empty()) {
        for (const auto& r : run_checks(p, checks)) failed = failed || r.status == CheckStatus::fail;
      }
      profiles.push_back(std::move(p));
    }
  }
  if (format == "csv") out << profiles_csv(profiles, options.params);
  return failed ? 1 : 0;
}

int forts_cmd(const Source& src, bool minimal, const std::string& format, std::ostream& out) {
  constexpr int kAllFortsMaxOrder = 16;
  if (format == "csv") out << "id,fort\n";
  for (const auto& ng : src.load()) {
    const Graph& g = ng.graph;
    std::vector<VertexSet> forts;
    if (minimal) {
      for (const auto& f : enumerate_minimal_forts(g)) forts.push_back(f.members());
    } else {
      if (g.order() > kAllFortsMaxOrder) {
        throw BudgetExceeded("listing all forts is limited to order " + std::to_string(kAllFortsMaxOrder) +
                             "; use --minimal");
      }
      const std::uint64_t count = std::uint64_t{1} << g.order();
      for (std::uint64_t m = 1; m < count; ++m) {
        if (is_fort(g, VertexSet{m})) forts.push_back(VertexSet{m});
      }
      std::stable_sort(forts.begin(), forts.end(), shortlex_less);
    }
    if (format == "csv") {
      for (VertexSet f : forts) {
        std::string members;
        for (int v : f) members += (members.empty() ? "" : " ") + std::to_string(v);
        out << ng.id << ',' << members << '\n';
      }
    } else {
      auto arr = nlohmann::json::array();
      for (VertexSet f : forts) arr.push_back(f.to_vector());
      out << nlohmann::json{{"id", ng.id}, {"minimal", minimal}, {"count", forts.size()}, {"forts", arr}}.dump()
          << '\n';
    }
  }
  return 0;
}

int table_cmd(const std::vector<std::string>& spec_texts, const std::string& spec_file, int threads,
              const std::string& format, const Budget& budget, std::ostream& out) {
  std::vector<FamilySpec> specs;
  for (const auto& s : spec_texts) specs.push_back(parse_family(s));
  if (!spec_file.empty()) {
    std::ifstream in(spec_file);
    if (!in) throw ParseError("cannot open " + spec_file);
    std::string line;
    while (std::getline(in, line)) {
      auto text = line.substr(0, line.find('#'));
      text.erase(0, text.find_first_not_of(" \t\r"));
      text.erase(text.find_last_not_of(" \t\r") + 1);
      if (!text.empty()) specs.push_back(parse_family(text));
    }
  }
  if (specs.empty()) specs = builtin_table_specs();
  const auto table = family_table(specs, threads, budget.max_order);
  if (format == "json") {
    for (const auto& r : table.rows) {
      nlohmann::json j{{"spec", r.spec},           {"n", r.n},         {"param", std::string(param_name(r.param))},
                       {"expected", r.expected}, {"match", r.match}, {"source", r.source}};
      j["computed"] = r.computed ? nlohmann::json(*r.computed) : nlohmann::json(nullptr);
      out << j.dump() << '\n';
    }
    for (const auto& s : table.unmatched) out << nlohmann::json{{"spec", s}, {"note", "no closed form"}}.dump() << '\n';
  } else {
    out << table_csv(table);
  }
  return table.all_match() ? 0 : 1;
}

int survey_cmd(SurveyOptions options, const std::string& checks_text, const std::string& format,
               const Budget& budget, std::ostream& out) {
  if (!checks_text.empty()) options.checks = parse_check_list(checks_text);
  options.deadline = budget.deadline();
  const auto report = survey(options);
  if (format == "csv") {
    out << "check,pass,fail,skipped,findings\n";
    for (const auto& t : report.tallies) {
      out << t.check << ',' << t.pass << ',' << t.fail << ',' << t.skipped << ',' << t.findings << '\n';
    }
  } else {
    for (const auto& line : survey_lines(report)) out << line << '\n';
  }
  return report.ok() ? 0 : 1;
}

int convert_cmd(const Source& src, const std::string& to, std::ostream& out) {
  for (const auto& ng : src.load()) {
    if (to == "graph6") {
      out << to_graph6(ng.graph) << '\n';
    } else {
      out << to_edge_list(ng.graph);
    }
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero forcing irredundance toolkit"};
  app.require_subcommand(0, 1);
  bool list_checks = false;
  bool list_families = false;
  app.add_flag("--list-checks", list_checks, "print the check catalog");
  app.add_flag("--list-families", list_families, "print the family names");

  Budget budget;
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--max-order", budget.max_order, "largest order the exact searches accept")
        ->check(CLI::Range(1, 64));
    cmd->add_option("--time-limit", budget.time_limit, "wall-clock limit in seconds (checked between graphs)")
        ->check(CLI::NonNegativeNumber);
  };

  auto* compute = app.add_subcommand("compute", "parameter profile of each input graph");
  Source compute_src;
  compute_src.attach(compute, true);
  std::string params_text = "zir,Z,Zbar,ZIR";
  bool witness = false;
  std::string compute_format = "json";
  std::string compute_checks;
  compute->add_option("--params", params_text, "comma-separated parameters or 'all'");
  compute->add_flag("--witness", witness, "include witness sets and private-fort certificates");
  compute->add_option("--format", compute_format)->check(CLI::IsMember({"json", "csv"}));
  compute->add_option("--checks", compute_checks, "comma-separated checks to run on each profile, or 'all'");
  add_budget(compute);

  auto* forts = app.add_subcommand("forts", "list forts of each input graph");
  Source forts_src;
  forts_src.attach(forts, true);
  bool minimal = false;
  std::string forts_format = "json";
  forts->add_flag("--minimal", minimal, "only inclusion-minimal forts");
  forts->add_option("--format", forts_format)->check(CLI::IsMember({"json", "csv"}));

  auto* table = app.add_subcommand("table", "compare computed values against closed forms");
  std::vector<std::string> table_specs;
  std::string table_file;
  int table_threads = 1;
  std::string table_format = "csv";
  table->add_option("--spec", table_specs, "family expression (repeatable); default: built-in list");
  table->add_option("--file", table_file, "file with one family expression per line");
  table->add_option("--threads", table_threads)->check(CLI::Range(1, 256));
  table->add_option("--format", table_format)->check(CLI::IsMember({"json", "csv"}));
  add_budget(table);

  auto* survey_app = app.add_subcommand("survey", "run checks over every labeled graph up to an order");
  SurveyOptions survey_options;
  std::string survey_checks;
  std::string survey_format = "json";
  survey_app->add_option("--order", survey_options.order, "largest order surveyed")->required();
  survey_app->add_option("--checks", survey_checks, "comma-separated checks, or 'all' (default)");
  survey_app->add_flag("--connected-only", survey_options.connected_only);
  survey_app->add_flag("--dedup", survey_options.dedup, "one graph per isomorphism class");
  survey_app->add_option("--threads", survey_options.threads)->check(CLI::Range(1, 256));
  survey_app->add_flag("--profiles", survey_options.emit_profiles, "emit one profile line per graph");
  survey_app->add_option("--format", survey_format)->check(CLI::IsMember({"json", "csv"}));
  int survey_max_order = 6;
  survey_app->add_option("--max-order", survey_max_order, "survey order budget (at most 7)")->check(CLI::Range(1, 7));
  double survey_time_limit = 0;
  survey_app->add_option("--time-limit", survey_time_limit, "wall-clock limit in seconds")
      ->check(CLI::NonNegativeNumber);

  auto* convert = app.add_subcommand("convert", "transcode between graph6 and edge lists");
  Source convert_src;
  convert_src.attach(convert, true);
  std::string convert_to = "edges";
  convert->add_option("--to", convert_to)->check(CLI::IsMember({"edges", "graph6"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list_checks) {
      for (const auto& info : check_catalog()) out << info.name << '\t' << info.summary << '\n';
      return 0;
    }
    if (list_families) {
      for (const auto& name : family_names()) out << name << '\n';
      return 0;
    }
    if (compute->parsed()) {
      return compute_cmd(compute_src, params_text, witness, compute_format, compute_checks, budget, out);
    }
    if (forts->parsed()) return forts_cmd(forts_src, minimal, forts_format, out);
    if (table->parsed()) return table_cmd(table_specs, table_file, table_threads, table_format, budget, out);
    if (survey_app->parsed()) {
      survey_options.max_order = survey_max_order;
      return survey_cmd(survey_options, survey_checks, survey_format, Budget{15, survey_time_limit}, out);
    }
    if (convert->parsed()) return convert_cmd(convert_src, convert_to, out);
    err << app.help();
    return 2;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace zir
