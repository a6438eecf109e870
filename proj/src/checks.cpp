#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "zir/errors.hpp"
#include "zir/graph6.hpp"
#include "zir/verify.hpp"

namespace zir {

namespace {

constexpr std::array<CheckInfo, 31> kCatalog = {{
    {"chain", CheckKind::bound, "zir <= Z <= Zbar <= ZIR"},
    {"min-degree", CheckKind::bound, "min degree <= zir"},
    {"edge-upper", CheckKind::bound, "ZIR <= n-1 when there is an edge"},
    {"domination-sandwich", CheckKind::bound, "n - gamma2 <= ZIR <= n - gamma (no isolated vertices)"},
    {"mindeg3", CheckKind::bound, "min degree >= 3: gamma2 <= n/2 and ZIR >= n/2"},
    {"mindeg2", CheckKind::bound, "min degree = 2: gamma2 <= 2n/3 and ZIR > n/3"},
    {"max-degree", CheckKind::bound, "connected: ZIR <= n*Delta/(Delta+1)"},
    {"cubic", CheckKind::bound, "connected cubic: n/2 <= ZIR <= 3n/4"},
    {"power-vs-Z", CheckKind::bound, "gammaP <= Z"},
    {"certificate-prefix", CheckKind::bound, "|S| <= n - |F_1 u ... u F_k| + k for every certificate prefix"},
    {"cut-vertex", CheckKind::bound, "ZIR(G) >= sum of the l-1 largest ZIR(G - c components), l >= 3"},
    {"join-bounds", CheckKind::bound, "G join H with both sides >= 2: n-4 <= ZIR <= n-1"},
    {"join-apex", CheckKind::bound, "G join K1: n_G - gamma(G) <= ZIR <= n_G - gamma(G) + 1"},
    {"corona-bounds", CheckKind::bound, "corona G o H bounds via ZIR(G), ZIR(H), ZIR(H join K1)"},
    {"corona-alpha", CheckKind::bound, "corona G o H >= alpha(G) ZIR(H join K1) + (n_G - alpha(G))(ZIR(H) - 1)"},
    {"empty-characterization", CheckKind::characterization, "edgeless <=> zir = n <=> ZIR = n"},
    {"n-1-characterization", CheckKind::characterization, "K_m plus isolated (m >= 2) <=> zir, Z, Zbar, ZIR = n-1"},
    {"zir1-characterization", CheckKind::characterization, "zir = 1 <=> path or star"},
    {"zn2-form", CheckKind::characterization, "Z >= n-2 <=> complement form (n >= 3)"},
    {"zn2-characterization", CheckKind::characterization,
     "zir = n-2 <=> complement form with side conditions (n >= 3)"},
    {"abandon-identity", CheckKind::characterization, "no abandoned fort => ZIR = Zbar"},
    {"all-leaf", CheckKind::characterization, "H o tK1 (t >= 2) has an all-leaf maximum ZIr-set"},
    {"additivity", CheckKind::characterization, "zir and ZIR add over components"},
    {"minimal-zfs", CheckKind::subset, "minimal ZFS <=> maximal ZIr-set that is a ZFS"},
    {"dominating-complement", CheckKind::subset, "complement of a ZIr-set dominates (no isolated vertices)"},
    {"twins", CheckKind::subset, "every ZFS holds all but at most one of each twin class"},
    {"heredity", CheckKind::subset, "subsets of ZIr-sets are ZIr-sets"},
    {"private-fort-oracle", CheckKind::subset, "closure-complement private fort test matches brute force"},
    {"solver-consistency", CheckKind::subset, "solver values and witnesses match exhaustive tables"},
    {"gammaP-vs-zir", CheckKind::open_question, "is gammaP <= zir?"},
    {"gamma-vs-ZIR", CheckKind::open_question, "is gamma <= ZIR?"},
}};

std::string graph_id(const Graph& g) {
  try {
    return to_graph6(g);
  } catch (const SizeLimitError&) {
    return "(order " + std::to_string(g.order()) + ")";
  }
}

/// All 2^n subsets, indexed by bit mask.
struct SubsetTables {
  std::vector<VertexSet> closure;
  std::vector<char> zfs;
  std::vector<char> zir;
  std::vector<char> fort;

  explicit SubsetTables(const Graph& g) {
    const std::uint64_t count = std::uint64_t{1} << g.order();
    closure.resize(count);
    zfs.resize(count);
    zir.resize(count);
    fort.resize(count);
    for (std::uint64_t m = 0; m < count; ++m) {
      closure[m] = zir::closure(g, VertexSet{m});
      zfs[m] = closure[m] == g.vertices();
      fort[m] = is_fort(g, VertexSet{m});
    }
    for (std::uint64_t m = 0; m < count; ++m) {
      bool ok = true;
      for (int x : VertexSet{m}) {
        if (closure[m & ~(std::uint64_t{1} << x)].contains(x)) {
          ok = false;
          break;
        }
      }
      zir[m] = ok;
    }
  }

  std::uint64_t size() const { return closure.size(); }

  bool minimal_zfs(std::uint64_t m) const {
    if (!zfs[m]) return false;
    for (int x : VertexSet{m}) {
      if (zfs[m & ~(std::uint64_t{1} << x)]) return false;
    }
    return true;
  }

  bool maximal_zir(std::uint64_t m, int n) const {
    if (!zir[m]) return false;
    for (int v : VertexSet::first(n) - VertexSet{m}) {
      if (zir[m | (std::uint64_t{1} << v)]) return false;
    }
    return true;
  }
};

class Context {
 public:
  explicit Context(const ParamProfile& p) : p_(p), g_(p.graph) {}

  const ParamProfile& profile() const { return p_; }
  const Graph& graph() const { return g_; }

  const SubsetTables& tables() {
    if (!tables_) tables_.emplace(g_);
    return *tables_;
  }

  const std::optional<ComplementForm>& complement_form() {
    if (!form_computed_) {
      form_ = recognize_zn2_complement_form(g_);
      form_computed_ = true;
    }
    return form_;
  }

  int upper_zir_of(const Graph& h) { return upper_zir_number(h, limits()).value; }
  SearchLimits limits() const { return SearchLimits{std::max(p_.n, 15)}; }

 private:
  const ParamProfile& p_;
  const Graph& g_;
  std::optional<SubsetTables> tables_;
  std::optional<ComplementForm> form_;
  bool form_computed_ = false;
};

class Reporter {
 public:
  Reporter(std::string check, const ParamProfile& p) : check_(std::move(check)), p_(p) {}

  CheckReport pass(std::string detail = {}) const { return make(CheckStatus::pass, std::move(detail)); }
  CheckReport skip(std::string why) const { return make(CheckStatus::skipped, std::move(why)); }
  CheckReport fail(std::string detail) const {
    auto r = make(CheckStatus::fail, std::move(detail));
    r.counterexample = graph_id(p_.graph);
    return r;
  }
  CheckReport finding(std::string detail) const {
    auto r = make(CheckStatus::finding, std::move(detail));
    r.counterexample = graph_id(p_.graph);
    return r;
  }
  CheckReport verdict(bool ok, std::string detail) const { return ok ? pass(std::move(detail)) : fail(std::move(detail)); }

  /// Skip report naming the first missing parameter, if any.
  std::optional<CheckReport> need(std::initializer_list<Param> params) const {
    for (Param q : params) {
      if (!p_.value(q)) return skip("requires " + std::string(param_name(q)) + ", which was not computed");
    }
    return std::nullopt;
  }

 private:
  CheckReport make(CheckStatus s, std::string detail) const { return {check_, p_.id, s, std::move(detail), {}}; }
  std::string check_;
  const ParamProfile& p_;
};

std::string show(std::initializer_list<std::pair<const char*, int>> items) {
  std::string out;
  for (auto [k, v] : items) out += (out.empty() ? "" : " ") + std::string(k) + "=" + std::to_string(v);
  return out;
}

std::optional<CheckReport> need_table(const Reporter& r, int n) {
  if (n > kTableMaxOrder) {
    return r.skip("order " + std::to_string(n) + " exceeds the subset-table limit " + std::to_string(kTableMaxOrder));
  }
  return std::nullopt;
}

/// Operands of a two-operand product spec of the given kind.
std::optional<std::pair<FamilySpec, FamilySpec>> binary_product(const ParamProfile& p, ProductOp op) {
  if (!p.spec || p.spec->kind != FamilySpec::Kind::Product || p.spec->op != op) return std::nullopt;
  if (p.spec->operands.size() != 2) return std::nullopt;
  return std::pair{p.spec->operands[0], p.spec->operands[1]};
}

// --- bounds -----------------------------------------------------------------

CheckReport check_chain(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  if (auto s = r.need({Param::zir, Param::Z, Param::Zbar, Param::ZIR})) return *s;
  const int a = *p.value(Param::zir), b = *p.value(Param::Z), d = *p.value(Param::Zbar), e = *p.value(Param::ZIR);
  return r.verdict(a <= b && b <= d && d <= e, show({{"zir", a}, {"Z", b}, {"Zbar", d}, {"ZIR", e}}));
}

CheckReport check_min_degree(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  if (auto s = r.need({Param::zir})) return *s;
  return r.verdict(p.min_degree <= *p.value(Param::zir), show({{"delta", p.min_degree}, {"zir", *p.value(Param::zir)}}));
}

CheckReport check_edge_upper(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  if (!p.has_edge) return r.skip("no edge");
  if (auto s = r.need({Param::ZIR})) return *s;
  return r.verdict(*p.value(Param::ZIR) <= p.n - 1, show({{"n", p.n}, {"ZIR", *p.value(Param::ZIR)}}));
}

CheckReport check_domination_sandwich(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  if (p.n < 2) return r.skip("order below 2");
  if (!p.isolated_free) return r.skip("has an isolated vertex");
  if (auto s = r.need({Param::ZIR, Param::gamma, Param::gamma2})) return *s;
  const int zir_upper = *p.value(Param::ZIR), g1 = *p.value(Param::gamma), g2 = *p.value(Param::gamma2);
  return r.verdict(p.n - g2 <= zir_upper && zir_upper <= p.n - g1,
                   show({{"n", p.n}, {"gamma", g1}, {"gamma2", g2}, {"ZIR", zir_upper}}));
}

CheckReport check_mindeg3(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  if (p.min_degree < 3) return r.skip("min degree below 3");
  if (auto s = r.need({Param::ZIR, Param::gamma2})) return *s;
  const int g2 = *p.value(Param::gamma2), zu = *p.value(Param::ZIR);
  return r.verdict(2 * g2 <= p.n && 2 * zu >= p.n, show({{"n", p.n}, {"gamma2", g2}, {"ZIR", zu}}));
}

CheckReport check_mindeg2(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  if (p.min_degree != 2) return r.skip("min degree is not 2");
  if (auto s = r.need({Param::ZIR, Param::gamma2})) return *s;
  const int g2 = *p.value(Param::gamma2), zu = *p.value(Param::ZIR);
  const bool ok = 3 * g2 <= 2 * p.n && (p.n < 3 || 3 * zu > p.n);
  return r.verdict(ok, show({{"n", p.n}, {"gamma2", g2}, {"ZIR", zu}}));
}

CheckReport check_max_degree(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  if (!p.connected) return r.skip("not connected");
  if (p.n < 2) return r.skip("order below 2");
  if (auto s = r.need({Param::ZIR})) return *s;
  const int zu = *p.value(Param::ZIR), d = p.max_degree;
  return r.verdict(zu * (d + 1) <= d * p.n, show({{"n", p.n}, {"Delta", d}, {"ZIR", zu}}));
}

CheckReport check_cubic(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  if (!p.connected || p.min_degree != 3 || p.max_degree != 3) return r.skip("not connected cubic");
  if (p.n < 4) return r.skip("order below 4");
  if (auto s = r.need({Param::ZIR})) return *s;
  const int zu = *p.value(Param::ZIR);
  return r.verdict(2 * zu >= p.n && 4 * zu <= 3 * p.n, show({{"n", p.n}, {"ZIR", zu}}));
}

CheckReport check_power_vs_z(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  if (auto s = r.need({Param::gammaP, Param::Z})) return *s;
  return r.verdict(*p.value(Param::gammaP) <= *p.value(Param::Z),
                   show({{"gammaP", *p.value(Param::gammaP)}, {"Z", *p.value(Param::Z)}}));
}

CheckReport check_certificate_prefix(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  const Graph& g = c.graph();
  int checked = 0;
  for (Param q : {Param::zir, Param::ZIR}) {
    const ParamValue* v = p.find(q);
    if (!v || !v->certified) continue;
    const ZirWitness& w = *v->certified;
    VertexSet covered;
    int k = 0;
    for (const auto& cert : w.certificates) {
      if (!is_fort(g, cert.fort) || (cert.fort & w.set) != VertexSet::single(cert.owner)) {
        return r.fail(std::string(param_name(q)) + " certificate of " + std::to_string(cert.owner) + " is not private");
      }
      covered |= cert.fort;
      ++k;
      if (w.set.size() > p.n - covered.size() + k) {
        return r.fail(std::string(param_name(q)) + " witness " + w.set.to_string() + " breaks the prefix bound at k=" +
                      std::to_string(k));
      }
    }
    if (k != w.set.size()) return r.fail(std::string(param_name(q)) + " witness lacks certificates");
    ++checked;
  }
  if (checked == 0) return r.skip("no certified witness computed");
  return r.pass(std::to_string(checked) + " witnesses");
}

CheckReport check_cut_vertex(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  const Graph& g = c.graph();
  if (!p.connected) return r.skip("not connected");
  if (p.n < 4) return r.skip("fewer than 4 vertices");
  if (auto s = r.need({Param::ZIR})) return *s;
  const int zu = *p.value(Param::ZIR);
  std::map<std::uint64_t, int> cache;
  int applied = 0;
  for (int v : g.vertices()) {
    const VertexSet rest = g.vertices().without(v);
    const Graph minus = g.induced(rest);
    const auto comps = minus.components();
    if (comps.size() < 3) continue;
    std::vector<int> values;
    for (VertexSet comp : comps) {
      auto [it, fresh] = cache.try_emplace(comp.bits(), 0);
      if (fresh) it->second = c.upper_zir_of(minus.induced(comp));
      values.push_back(it->second);
    }
    std::sort(values.rbegin(), values.rend());
    const int bound = std::accumulate(values.begin(), values.end() - 1, 0);
    if (zu < bound) {
      return r.fail("cut vertex " + std::to_string(v) + ": ZIR=" + std::to_string(zu) + " < " + std::to_string(bound));
    }
    ++applied;
  }
  if (applied == 0) return r.skip("no cut vertex leaving 3 or more components");
  return r.pass(std::to_string(applied) + " cut vertices");
}

CheckReport check_join_bounds(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  const auto comps = complement(c.graph()).components();
  const bool splittable = comps.size() >= 3 || (comps.size() == 2 && comps[0].size() >= 2 && comps[1].size() >= 2);
  if (!splittable) return r.skip("not a join of two graphs with at least 2 vertices each");
  if (auto s = r.need({Param::ZIR})) return *s;
  const int zu = *p.value(Param::ZIR);
  return r.verdict(p.n - 4 <= zu && zu <= p.n - 1, show({{"n", p.n}, {"ZIR", zu}}));
}

CheckReport check_join_apex(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  const Graph& g = c.graph();
  if (p.n < 2) return r.skip("order below 2");
  int apex = -1;
  for (int v : g.vertices()) {
    if (g.degree(v) == p.n - 1) {
      apex = v;
      break;
    }
  }
  if (apex < 0) return r.skip("no universal vertex");
  const Graph h = g.induced(g.vertices().without(apex));
  if (h.has_isolated_vertex()) return r.skip("G - apex has an isolated vertex");
  if (auto s = r.need({Param::ZIR})) return *s;
  const int zu = *p.value(Param::ZIR);
  const int nh = h.order();
  const int gamma_h = k_domination_number(h, 1, c.limits()).value;
  const int zir_h = c.upper_zir_of(h);
  bool ok = nh - gamma_h <= zu && zu <= nh - gamma_h + 1;
  if (zir_h == nh - gamma_h) ok = ok && zu == nh - gamma_h + 1;
  return r.verdict(ok, show({{"n_G", nh}, {"gamma(G)", gamma_h}, {"ZIR(G)", zir_h}, {"ZIR", zu}}));
}

struct CoronaParts {
  Graph g;
  Graph h;
};

std::optional<CoronaParts> corona_parts(const ParamProfile& p) {
  auto ops = binary_product(p, ProductOp::Corona);
  if (!ops) return std::nullopt;
  return CoronaParts{generate(ops->first), generate(ops->second)};
}

CheckReport check_corona_bounds(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  auto parts = corona_parts(p);
  if (!parts) return r.skip("not a two-operand corona spec");
  if (auto s = r.need({Param::ZIR})) return *s;
  const int zu = *p.value(Param::ZIR);
  const int ng = parts->g.order();
  std::string detail;
  bool ok = true;
  if (parts->h.order() >= 2) {
    ok = ok && zu >= ng;
    detail += "ZIR >= n_G; ";
  }
  if (!parts->h.has_isolated_vertex()) {
    const Graph apex = join(parts->h, complete_graph(1));
    const int zg = c.upper_zir_of(parts->g);
    const int zh = c.upper_zir_of(parts->h);
    const int za = c.upper_zir_of(apex);
    const int lower = zg * za + (ng - zg) * zh;
    const int upper = ng * za;
    ok = ok && lower <= zu && zu <= upper;
    detail += show({{"lower", lower}, {"upper", upper}});
    if (graph_abandons_fort(apex, c.limits()).abandons) {
      ok = ok && zu == upper;
      detail += " (H join K1 abandons a fort: equality)";
    }
  } else {
    detail += "H has an isolated vertex";
  }
  return r.verdict(ok, "ZIR=" + std::to_string(zu) + "; " + detail);
}

CheckReport check_corona_alpha(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  auto parts = corona_parts(p);
  if (!parts) return r.skip("not a two-operand corona spec");
  if (auto s = r.need({Param::ZIR})) return *s;
  const int zu = *p.value(Param::ZIR);
  const int ng = parts->g.order();
  const int a = independence_number(parts->g, c.limits()).value;
  const int za = c.upper_zir_of(join(parts->h, complete_graph(1)));
  const int zh = c.upper_zir_of(parts->h);
  const int lower = a * za + (ng - a) * (zh - 1);
  return r.verdict(zu >= lower, show({{"alpha(G)", a}, {"lower", lower}, {"ZIR", zu}}));
}

// --- characterizations --------------------------------------------------------

CheckReport check_empty_characterization(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  if (auto s = r.need({Param::zir, Param::ZIR})) return *s;
  const bool a = !p.has_edge, b = *p.value(Param::zir) == p.n, d = *p.value(Param::ZIR) == p.n;
  return r.verdict(a == b && b == d, std::string("edgeless=") + (a ? "yes" : "no"));
}

CheckReport check_n1_characterization(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  if (p.n < 2) return r.skip("order below 2");
  if (auto s = r.need({Param::zir, Param::Z, Param::Zbar, Param::ZIR})) return *s;
  const bool form = is_clique_plus_isolated(c.graph());
  bool ok = true;
  for (Param q : {Param::zir, Param::Z, Param::Zbar, Param::ZIR}) ok = ok && ((*p.value(q) == p.n - 1) == form);
  return r.verdict(ok, std::string("clique plus isolated=") + (form ? "yes" : "no"));
}

CheckReport check_zir1_characterization(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  if (auto s = r.need({Param::zir})) return *s;
  const bool form = is_path(c.graph()) || is_star(c.graph());
  return r.verdict(form == (*p.value(Param::zir) == 1),
                   std::string("path or star=") + (form ? "yes" : "no") + " zir=" + std::to_string(*p.value(Param::zir)));
}

CheckReport check_zn2_form(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  if (p.n < 3) return r.skip("order below 3");
  if (auto s = r.need({Param::Z})) return *s;
  const auto& form = c.complement_form();
  const bool high = *p.value(Param::Z) >= p.n - 2;
  return r.verdict(high == form.has_value(),
                   "Z=" + std::to_string(*p.value(Param::Z)) + " form=" + (form ? form->to_string() : "none"));
}

CheckReport check_zn2_characterization(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  if (p.n < 3) return r.skip("order below 3");
  if (auto s = r.need({Param::zir})) return *s;
  const auto& form = c.complement_form();
  const bool structural = form && form->zir_side_conditions;
  const bool value = *p.value(Param::zir) == p.n - 2;
  return r.verdict(structural == value, "zir=" + std::to_string(*p.value(Param::zir)) +
                                            " form=" + (form ? form->to_string() : "none") +
                                            " side=" + (structural ? "yes" : "no"));
}

CheckReport check_abandon_identity(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  if (auto s = r.need({Param::Zbar, Param::ZIR})) return *s;
  const Graph& g = c.graph();
  const auto result = graph_abandons_fort(g, c.limits());
  const int zu = *p.value(Param::ZIR);
  if (!result.abandons) {
    return r.verdict(zu == *p.value(Param::Zbar), "no abandoned fort; " + show({{"Zbar", *p.value(Param::Zbar)}, {"ZIR", zu}}));
  }
  const VertexSet s = result.upper_set->set;
  const VertexSet f = result.fort->members();
  const bool ok = s.size() == zu && is_maximal_zir_set(g, s) && is_fort(g, f) && !f.intersects(s) &&
                  !is_zero_forcing_set(g, s);
  return r.verdict(ok, "abandons " + f.to_string() + " from " + s.to_string());
}

CheckReport check_all_leaf(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  auto ops = binary_product(p, ProductOp::Corona);
  if (!ops || !ops->second.is_named("empty") || ops->second.params.empty() || ops->second.params[0] < 2) {
    return r.skip("not a corona with tK1, t >= 2");
  }
  const Graph h = generate(ops->first);
  if (!h.is_connected() || h.order() < 3) return r.skip("base graph not connected of order >= 3");
  if (auto s = r.need({Param::ZIR})) return *s;
  const auto leafy = max_zir_set_within(c.graph(), c.graph().leaves(), c.limits());
  return r.verdict(leafy.value == *p.value(Param::ZIR),
                   "all-leaf " + leafy.witness.set.to_string() + " size " + std::to_string(leafy.value));
}

CheckReport check_additivity(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  if (p.connected) return r.skip("connected");
  if (auto s = r.need({Param::zir, Param::ZIR})) return *s;
  int lower = 0, upper = 0;
  for (VertexSet comp : c.graph().components()) {
    const Graph h = c.graph().induced(comp);
    lower += lower_zir_number(h, c.limits()).value;
    upper += upper_zir_number(h, c.limits()).value;
  }
  return r.verdict(lower == *p.value(Param::zir) && upper == *p.value(Param::ZIR),
                   show({{"sum zir", lower}, {"sum ZIR", upper}}));
}

// --- subset tables ------------------------------------------------------------

CheckReport check_minimal_zfs(Context& c, const Reporter& r) {
  const int n = c.profile().n;
  if (auto s = need_table(r, n)) return *s;
  const auto& t = c.tables();
  for (std::uint64_t m = 0; m < t.size(); ++m) {
    if (t.minimal_zfs(m) != (t.maximal_zir(m, n) && t.zfs[m])) {
      return r.fail("set " + VertexSet{m}.to_string());
    }
  }
  return r.pass();
}

CheckReport check_dominating_complement(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  if (!p.isolated_free) return r.skip("has an isolated vertex");
  if (auto s = need_table(r, p.n)) return *s;
  const auto& t = c.tables();
  const Graph& g = c.graph();
  for (std::uint64_t m = 0; m < t.size(); ++m) {
    if (!t.zir[m]) continue;
    const VertexSet rest = g.vertices() - VertexSet{m};
    if (g.closed_neighbors(rest) != g.vertices()) return r.fail("ZIr-set " + VertexSet{m}.to_string());
  }
  return r.pass();
}

CheckReport check_twins(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  if (auto s = need_table(r, p.n)) return *s;
  std::vector<VertexSet> classes;
  for (VertexSet cls : twin_classes(c.graph())) {
    if (cls.size() >= 2) classes.push_back(cls);
  }
  if (classes.empty()) return r.skip("no twin class of size 2 or more");
  const auto& t = c.tables();
  for (std::uint64_t m = 0; m < t.size(); ++m) {
    if (!t.zfs[m]) continue;
    for (VertexSet cls : classes) {
      if ((cls & VertexSet{m}).size() < cls.size() - 1) {
        return r.fail("ZFS " + VertexSet{m}.to_string() + " vs twins " + cls.to_string());
      }
    }
  }
  return r.pass(std::to_string(classes.size()) + " twin classes");
}

CheckReport check_heredity(Context& c, const Reporter& r) {
  if (auto s = need_table(r, c.profile().n)) return *s;
  const auto& t = c.tables();
  for (std::uint64_t m = 0; m < t.size(); ++m) {
    if (!t.zir[m]) continue;
    for (int x : VertexSet{m}) {
      if (!t.zir[m & ~(std::uint64_t{1} << x)]) return r.fail("ZIr-set " + VertexSet{m}.to_string());
    }
  }
  return r.pass();
}

CheckReport check_private_fort_oracle(Context& c, const Reporter& r) {
  const int n = c.profile().n;
  if (auto s = need_table(r, n)) return *s;
  const Graph& g = c.graph();
  const auto& t = c.tables();
  // owners[m]: members of m owning some fort F with F n m = {x}, by listing
  // every fort and every way to extend one of its members by vertices
  // outside it.
  std::vector<std::uint64_t> owners(t.size(), 0);
  const std::uint64_t all = g.vertices().bits();
  for (std::uint64_t f = 1; f < t.size(); ++f) {
    if (!t.fort[f]) continue;
    const std::uint64_t outside = all & ~f;
    for (int x : VertexSet{f}) {
      const std::uint64_t xb = std::uint64_t{1} << x;
      for (std::uint64_t sub = outside;; sub = (sub - 1) & outside) {
        owners[sub | xb] |= xb;
        if (sub == 0) break;
      }
    }
  }
  for (std::uint64_t m = 0; m < t.size(); ++m) {
    for (int x : VertexSet{m}) {
      const bool fast = has_private_fort(g, VertexSet{m}, x).has_value();
      const bool brute = (owners[m] >> x) & 1U;
      if (fast != brute) {
        return r.fail("S=" + VertexSet{m}.to_string() + " x=" + std::to_string(x) + " fast=" + (fast ? "yes" : "no"));
      }
    }
  }
  return r.pass();
}

CheckReport check_solver_consistency(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  const int n = p.n;
  if (auto s = need_table(r, n)) return *s;
  const Graph& g = c.graph();
  const auto& t = c.tables();
  int z = n, zbar = 0, lower = n, upper = 0;
  for (std::uint64_t m = 0; m < t.size(); ++m) {
    const int k = VertexSet{m}.size();
    if (t.zfs[m]) z = std::min(z, k);
    if (t.minimal_zfs(m)) zbar = std::max(zbar, k);
    if (t.zir[m]) upper = std::max(upper, k);
    if (t.maximal_zir(m, n)) lower = std::min(lower, k);
  }
  const std::array<std::pair<Param, int>, 4> expected = {
      {{Param::zir, lower}, {Param::Z, z}, {Param::Zbar, zbar}, {Param::ZIR, upper}}};
  int compared = 0;
  for (auto [q, v] : expected) {
    const ParamValue* got = p.find(q);
    if (!got) continue;
    ++compared;
    if (got->value != v) {
      return r.fail(std::string(param_name(q)) + " solver " + std::to_string(got->value) + " vs table " +
                    std::to_string(v));
    }
    const std::uint64_t m = got->witness.bits();
    const bool witness_ok = got->witness.size() == v && [&] {
      switch (q) {
        case Param::zir: return t.maximal_zir(m, n);
        case Param::Z: return static_cast<bool>(t.zfs[m]);
        case Param::Zbar: return t.minimal_zfs(m);
        default: return static_cast<bool>(t.zir[m]);
      }
    }();
    if (!witness_ok) return r.fail(std::string(param_name(q)) + " witness " + got->witness.to_string());
  }
  if (const ParamValue* v = p.find(Param::gamma); v && !is_k_dominating(g, v->witness, 1)) {
    return r.fail("gamma witness does not dominate");
  }
  if (const ParamValue* v = p.find(Param::gamma2); v && !is_k_dominating(g, v->witness, 2)) {
    return r.fail("gamma2 witness does not 2-dominate");
  }
  if (const ParamValue* v = p.find(Param::alpha); v && !is_independent(g, v->witness)) {
    return r.fail("alpha witness is not independent");
  }
  if (const ParamValue* v = p.find(Param::gammaP); v && !is_power_dominating(g, v->witness)) {
    return r.fail("gammaP witness does not power dominate");
  }
  if (compared == 0) return r.skip("no forcing parameter computed");
  return r.pass();
}

// --- open questions -----------------------------------------------------------

CheckReport check_gammap_vs_zir(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  if (auto s = r.need({Param::gammaP, Param::zir})) return *s;
  const int a = *p.value(Param::gammaP), b = *p.value(Param::zir);
  const auto detail = show({{"gammaP", a}, {"zir", b}});
  return a <= b ? r.pass(detail) : r.finding("gammaP > zir: " + detail);
}

CheckReport check_gamma_vs_zir_upper(Context& c, const Reporter& r) {
  const auto& p = c.profile();
  if (auto s = r.need({Param::gamma, Param::ZIR})) return *s;
  const int a = *p.value(Param::gamma), b = *p.value(Param::ZIR);
  const auto detail = show({{"gamma", a}, {"ZIR", b}});
  return a <= b ? r.pass(detail) : r.finding("gamma > ZIR: " + detail);
}

using CheckFn = CheckReport (*)(Context&, const Reporter&);

const std::map<std::string_view, CheckFn>& check_functions() {
  static const std::map<std::string_view, CheckFn> fns = {
      {"chain", check_chain},
      {"min-degree", check_min_degree},
      {"edge-upper", check_edge_upper},
      {"domination-sandwich", check_domination_sandwich},
      {"mindeg3", check_mindeg3},
      {"mindeg2", check_mindeg2},
      {"max-degree", check_max_degree},
      {"cubic", check_cubic},
      {"power-vs-Z", check_power_vs_z},
      {"certificate-prefix", check_certificate_prefix},
      {"cut-vertex", check_cut_vertex},
      {"join-bounds", check_join_bounds},
      {"join-apex", check_join_apex},
      {"corona-bounds", check_corona_bounds},
      {"corona-alpha", check_corona_alpha},
      {"empty-characterization", check_empty_characterization},
      {"n-1-characterization", check_n1_characterization},
      {"zir1-characterization", check_zir1_characterization},
      {"zn2-form", check_zn2_form},
      {"zn2-characterization", check_zn2_characterization},
      {"abandon-identity", check_abandon_identity},
      {"all-leaf", check_all_leaf},
      {"additivity", check_additivity},
      {"minimal-zfs", check_minimal_zfs},
      {"dominating-complement", check_dominating_complement},
      {"twins", check_twins},
      {"heredity", check_heredity},
      {"private-fort-oracle", check_private_fort_oracle},
      {"solver-consistency", check_solver_consistency},
      {"gammaP-vs-zir", check_gammap_vs_zir},
      {"gamma-vs-ZIR", check_gamma_vs_zir_upper},
  };
  return fns;
}

std::vector<CheckReport> run_kinds(const ParamProfile& p, std::initializer_list<CheckKind> kinds) {
  std::vector<std::string> names;
  for (const auto& info : kCatalog) {
    if (std::find(kinds.begin(), kinds.end(), info.kind) != kinds.end()) names.emplace_back(info.name);
  }
  return run_checks(p, names);
}

}  // namespace

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::finding: return "finding";
  }
  return "?";
}

std::span<const CheckInfo> check_catalog() { return kCatalog; }

bool is_known_check(std::string_view name) { return check_functions().contains(name); }

std::vector<std::string> parse_check_list(std::string_view text) {
  std::vector<std::string> out;
  if (text == "all") {
    for (const auto& info : kCatalog) out.emplace_back(info.name);
    return out;
  }
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string item(text.substr(0, comma));
    if (!item.empty()) {
      if (!is_known_check(item)) {
        throw InvalidSpec("unknown check '" + item + "' (run with --list-checks for the catalog)");
      }
      if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw InvalidSpec("empty check list");
  return out;
}

std::vector<CheckReport> run_checks(const ParamProfile& p, std::span<const std::string> names) {
  Context ctx(p);
  std::vector<CheckReport> out;
  out.reserve(names.size());
  for (const auto& name : names) {
    const auto it = check_functions().find(name);
    if (it == check_functions().end()) throw InvalidSpec("unknown check '" + name + "'");
    const Reporter reporter(name, p);
    try {
      out.push_back(it->second(ctx, reporter));
    } catch (const BudgetExceeded& e) {
      out.push_back(reporter.skip(e.what()));
    }
  }
  return out;
}

std::vector<CheckReport> check_bounds(const ParamProfile& p) {
  return run_kinds(p, {CheckKind::bound, CheckKind::open_question});
}

std::vector<CheckReport> check_characterizations(const ParamProfile& p) {
  return run_kinds(p, {CheckKind::characterization, CheckKind::subset});
}

}  // namespace zir
