#include <algorithm>
#include <array>

#include "zir/errors.hpp"
#include "zir/graph6.hpp"
#include "zir/verify.hpp"

namespace zir {

namespace {

constexpr std::array<Param, 8> kParams = {Param::zir,   Param::Z,      Param::Zbar,  Param::ZIR,
                                          Param::gamma, Param::gamma2, Param::alpha, Param::gammaP};
constexpr std::array<std::string_view, 8> kParamNames = {"zir",   "Z",      "Zbar",  "ZIR",
                                                         "gamma", "gamma2", "alpha", "gammaP"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

std::span<const Param> all_params() { return kParams; }

std::string_view param_name(Param p) { return kParamNames[static_cast<std::size_t>(p)]; }

Param parse_param(std::string_view name) {
  for (std::size_t i = 0; i < kParams.size(); ++i) {
    if (kParamNames[i] == name) return kParams[i];
  }
  std::string known;
  for (auto n : kParamNames) known += (known.empty() ? "" : ", ") + std::string(n);
  throw InvalidSpec("unknown parameter '" + std::string(name) + "' (expected one of " + known + ")");
}

std::vector<Param> parse_param_list(std::string_view text) {
  text = trim(text);
  if (text == "all") return {kParams.begin(), kParams.end()};
  std::vector<Param> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    if (!item.empty()) {
      const Param p = parse_param(item);
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw InvalidSpec("empty parameter list");
  return out;
}

std::optional<int> ParamProfile::value(Param p) const {
  const auto it = values.find(p);
  if (it == values.end()) return std::nullopt;
  return it->second.value;
}

const ParamValue* ParamProfile::find(Param p) const {
  const auto it = values.find(p);
  return it == values.end() ? nullptr : &it->second;
}

namespace {

ParamValue compute(const Graph& g, Param p, SearchLimits limits) {
  switch (p) {
    case Param::zir: {
      auto r = lower_zir_number(g, limits);
      return {r.value, r.witness.set, r.witness};
    }
    case Param::ZIR: {
      auto r = upper_zir_number(g, limits);
      return {r.value, r.witness.set, r.witness};
    }
    case Param::Z: {
      auto r = zero_forcing_number(g, limits);
      return {r.value, r.witness, std::nullopt};
    }
    case Param::Zbar: {
      auto r = upper_zero_forcing_number(g, limits);
      return {r.value, r.witness, std::nullopt};
    }
    case Param::gamma:
    case Param::gamma2: {
      auto r = k_domination_number(g, p == Param::gamma ? 1 : 2, limits);
      return {r.value, r.witness, std::nullopt};
    }
    case Param::alpha: {
      auto r = independence_number(g, limits);
      return {r.value, r.witness, std::nullopt};
    }
    case Param::gammaP: {
      auto r = power_domination_number(g, limits);
      return {r.value, r.witness, std::nullopt};
    }
  }
  throw std::logic_error("unhandled parameter");
}

}  // namespace

ParamProfile parameter_profile(const Graph& g, const ProfileOptions& options, std::string id) {
  ParamProfile p(id.empty() ? to_graph6(g) : std::move(id), g);
  p.n = g.order();
  p.min_degree = g.min_degree();
  p.max_degree = g.max_degree();
  p.has_edge = g.has_edge();
  p.connected = g.is_connected();
  p.isolated_free = !g.has_isolated_vertex();
  const SearchLimits limits{options.max_order};
  for (Param param : options.params) {
    try {
      p.values.emplace(param, compute(g, param, limits));
    } catch (const BudgetExceeded& e) {
      p.omissions.push_back(std::string(param_name(param)) + ": " + e.what());
    }
  }
  return p;
}

ParamProfile parameter_profile(const FamilySpec& spec, const ProfileOptions& options) {
  ParamProfile p = parameter_profile(generate(spec), options, spec.to_string());
  p.spec = spec;
  return p;
}

}  // namespace zir
