#include "zir/report.hpp"

#include <sstream>

#include "zir/graph6.hpp"

namespace zir {

using nlohmann::json;

namespace {

json set_json(VertexSet s) { return json(s.to_vector()); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json witness_json(const ZirWitness& w) {
  json certs = json::array();
  for (const auto& c : w.certificates) certs.push_back({{"owner", c.owner}, {"fort", set_json(c.fort)}});
  return {{"set", set_json(w.set)}, {"certificates", certs}, {"maximal", w.maximal}};
}

json profile_json(const ParamProfile& p, bool witnesses) {
  json j;
  j["id"] = p.id;
  std::string g6;
  try {
    g6 = to_graph6(p.graph);
  } catch (const std::exception&) {
  }
  j["graph6"] = g6;
  j["n"] = p.n;
  j["min_degree"] = p.min_degree;
  j["max_degree"] = p.max_degree;
  j["has_edge"] = p.has_edge;
  j["connected"] = p.connected;
  j["isolated_free"] = p.isolated_free;
  json params = json::object();
  for (Param q : all_params()) {
    const ParamValue* v = p.find(q);
    if (!v) continue;
    const std::string name(param_name(q));
    if (!witnesses) {
      params[name] = v->value;
    } else if (v->certified) {
      json w = witness_json(*v->certified);
      w["value"] = v->value;
      params[name] = w;
    } else {
      params[name] = {{"value", v->value}, {"witness", set_json(v->witness)}};
    }
  }
  j["params"] = params;
  if (!p.omissions.empty()) j["omissions"] = p.omissions;
  return j;
}

json report_json(const CheckReport& r) {
  json j{{"check", r.check}, {"scope", r.scope}, {"status", std::string(status_name(r.status))}, {"detail", r.detail}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

std::vector<std::string> survey_lines(const SurveyReport& report) {
  std::vector<std::string> lines;
  for (const auto& t : report.tallies) {
    lines.push_back(json{{"type", "tally"},
                         {"check", t.check},
                         {"pass", t.pass},
                         {"fail", t.fail},
                         {"skipped", t.skipped},
                         {"findings", t.findings}}
                        .dump());
  }
  for (const auto& r : report.failures) {
    json j = report_json(r);
    j["type"] = "failure";
    lines.push_back(j.dump());
  }
  for (const auto& r : report.findings) {
    json j = report_json(r);
    j["type"] = "finding";
    lines.push_back(j.dump());
  }
  for (const auto& e : report.leaderboard) {
    lines.push_back(json{{"type", "min-ZIR"},
                         {"order", e.order},
                         {"ZIR", e.min_upper_zir},
                         {"graph6", e.graph6},
                         {"attained_by", e.attained_by}}
                        .dump());
  }
  for (const auto& t : report.tuples) {
    lines.push_back(json{{"type", "realized"},
                         {"order", t.order},
                         {"zir", t.values[0]},
                         {"Z", t.values[1]},
                         {"Zbar", t.values[2]},
                         {"ZIR", t.values[3]},
                         {"count", t.count},
                         {"graph6", t.first_graph6}}
                        .dump());
  }
  lines.push_back(json{{"type", "summary"},
                       {"graphs", report.graphs},
                       {"failures", report.failures.size()},
                       {"findings", report.findings.size()}}
                      .dump());
  for (const auto& p : report.profile_lines) lines.push_back(p);
  return lines;
}

std::string table_csv(const FamilyTable& table) {
  std::ostringstream out;
  out << "spec,n,param,expected,computed,match,source\n";
  for (const auto& r : table.rows) {
    out << csv_field(r.spec) << ',' << r.n << ',' << param_name(r.param) << ',' << r.expected << ','
        << (r.computed ? std::to_string(*r.computed) : "") << ',' << (r.match ? "yes" : "no") << ','
        << csv_field(r.source) << '\n';
  }
  return out.str();
}

std::string profiles_csv(const std::vector<ParamProfile>& profiles, std::span<const Param> params) {
  std::ostringstream out;
  out << "id,n";
  for (Param q : params) out << ',' << param_name(q);
  out << '\n';
  for (const auto& p : profiles) {
    out << csv_field(p.id) << ',' << p.n;
    for (Param q : params) {
      out << ',';
      if (auto v = p.value(q)) out << *v;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace zir
