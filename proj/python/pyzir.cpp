#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zir/domination.hpp"
#include "zir/errors.hpp"
#include "zir/family.hpp"
#include "zir/graph6.hpp"
#include "zir/io.hpp"
#include "zir/irredundance.hpp"
#include "zir/report.hpp"
#include "zir/verify.hpp"

namespace py = pybind11;
using namespace zir;

namespace {

VertexSet to_set(const std::vector<int>& vs) { return VertexSet::of(std::span<const int>(vs)); }

py::dict witness_dict(const ZirWitness& w) {
  py::list certs;
  for (const auto& c : w.certificates) {
    py::dict d;
    d["owner"] = c.owner;
    d["fort"] = c.fort.to_vector();
    certs.append(d);
  }
  py::dict out;
  out["set"] = w.set.to_vector();
  out["certificates"] = certs;
  out["maximal"] = w.maximal;
  return out;
}

py::dict set_value(const SetValue& v) {
  py::dict d;
  d["value"] = v.value;
  d["witness"] = v.witness.to_vector();
  return d;
}

py::dict zir_value(const ZirValue& v) {
  py::dict d = witness_dict(v.witness);
  d["value"] = v.value;
  return d;
}

SearchLimits limits(int max_order) { return SearchLimits{max_order}; }

}  // namespace

PYBIND11_MODULE(pyzir, m) {
  m.doc() = "Zero forcing, forts, and zero forcing irredundance on small graphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidSpec>(m, "InvalidSpec", PyExc_ValueError);
  py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def_static("from_family", [](const std::string& s) { return generate(parse_family(s)); })
      .def_static("from_edge_list", [](const std::string& s) { return parse_edge_list(s); })
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def("edge_list", [](const Graph& g) { return to_edge_list(g); })
      .def_property_readonly("order", &Graph::order)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); })
      .def("degree", &Graph::degree)
      .def("is_connected", &Graph::is_connected)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "<Graph n=" + std::to_string(g.order()) + " " + to_graph6(g) + ">"; });

  m.def("complement", &complement);
  m.def("disjoint_union", &disjoint_union);
  m.def("join", &join);
  m.def("corona", &corona);

  m.def("closure", [](const Graph& g, const std::vector<int>& blue) { return closure(g, to_set(blue)).to_vector(); });
  m.def("is_zero_forcing_set", [](const Graph& g, const std::vector<int>& b) { return is_zero_forcing_set(g, to_set(b)); });
  m.def("is_fort", [](const Graph& g, const std::vector<int>& f) { return is_fort(g, to_set(f)); });
  m.def("minimal_forts", [](const Graph& g) {
    std::vector<std::vector<int>> out;
    for (const auto& f : enumerate_minimal_forts(g)) out.push_back(f.members().to_vector());
    return out;
  });
  m.def("zero_forcing_number", [](const Graph& g, int max_order) { return set_value(zero_forcing_number(g, limits(max_order))); },
        py::arg("g"), py::arg("max_order") = 24);
  m.def("upper_zero_forcing_number",
        [](const Graph& g, int max_order) { return set_value(upper_zero_forcing_number(g, limits(max_order))); },
        py::arg("g"), py::arg("max_order") = 24);

  m.def("private_fort", [](const Graph& g, const std::vector<int>& s, int x) -> py::object {
    const auto c = has_private_fort(g, to_set(s), x);
    if (!c) return py::none();
    return py::cast(c->fort.to_vector());
  });
  m.def("minimal_private_fort", [](const Graph& g, const std::vector<int>& s, int x) -> py::object {
    const auto f = minimal_private_fort(g, to_set(s), x);
    if (!f) return py::none();
    return py::cast(f->members().to_vector());
  });
  m.def("is_zir_set", [](const Graph& g, const std::vector<int>& s) { return is_zir_set(g, to_set(s)); });
  m.def("is_maximal_zir_set", [](const Graph& g, const std::vector<int>& s) { return is_maximal_zir_set(g, to_set(s)); });
  m.def("lower_zir_number", [](const Graph& g, int max_order) { return zir_value(lower_zir_number(g, limits(max_order))); },
        py::arg("g"), py::arg("max_order") = 24);
  m.def("upper_zir_number", [](const Graph& g, int max_order) { return zir_value(upper_zir_number(g, limits(max_order))); },
        py::arg("g"), py::arg("max_order") = 24);
  m.def("graph_abandons_fort", [](const Graph& g) {
    const auto r = graph_abandons_fort(g);
    py::dict d;
    d["abandons"] = r.abandons;
    d["upper_set"] = r.upper_set ? py::object(witness_dict(*r.upper_set)) : py::none();
    d["fort"] = r.fort ? py::cast(r.fort->members().to_vector()) : py::none();
    return d;
  });

  m.def("domination_number", [](const Graph& g, int k) {
    const auto r = k_domination_number(g, k);
    return set_value(SetValue{r.value, r.witness});
  }, py::arg("g"), py::arg("k") = 1);
  m.def("independence_number", [](const Graph& g) { return set_value(independence_number(g)); });
  m.def("power_domination_number", [](const Graph& g) { return set_value(power_domination_number(g)); });

  m.def("profile", [](const Graph& g, const std::string& params, int max_order, bool witnesses) {
    ProfileOptions o;
    o.params = parse_param_list(params);
    o.max_order = max_order;
    return profile_json(parameter_profile(g, o, to_graph6(g)), witnesses).dump();
  }, py::arg("g"), py::arg("params") = "all", py::arg("max_order") = 15, py::arg("witnesses") = false,
     "Parameter profile as a JSON string.");
  m.def("check", [](const Graph& g, const std::string& checks) {
    const ParamProfile p = parameter_profile(g, {}, to_graph6(g));
    std::vector<py::dict> out;
    for (const auto& r : run_checks(p, parse_check_list(checks))) {
      py::dict d;
      d["check"] = r.check;
      d["status"] = std::string(status_name(r.status));
      d["detail"] = r.detail;
      out.push_back(d);
    }
    return out;
  }, py::arg("g"), py::arg("checks") = "all");
  m.def("family_table", [](int threads) { return table_csv(family_table(builtin_table_specs(), threads)); },
        py::arg("threads") = 1, "Built-in closed-form table as CSV.");
  m.def("survey", [](int order, const std::string& checks, int threads, bool connected_only) {
    SurveyOptions o;
    o.order = order;
    o.checks = checks == "all" ? std::vector<std::string>{} : parse_check_list(checks);
    o.threads = threads;
    o.connected_only = connected_only;
    return survey_lines(survey(o));
  }, py::arg("order"), py::arg("checks") = "all", py::arg("threads") = 1, py::arg("connected_only") = false,
     "Survey report as JSON lines.");
}
