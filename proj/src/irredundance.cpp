#include "zir/irredundance.hpp"

#include <algorithm>
#include <functional>

#include "zir/domination.hpp"
#include "zir/errors.hpp"

namespace zir {

namespace {

void check_budget(const Graph& g, int max_order, const char* what) {
  if (g.order() > max_order) {
    throw BudgetExceeded(std::string(what) + ": order " + std::to_string(g.order()) +
                         " exceeds the search budget of " + std::to_string(max_order));
  }
}

bool owns_private_fort(const Graph& g, VertexSet s, int x) { return !closure(g, s.without(x)).contains(x); }

}  // namespace

std::optional<PrivateFortCertificate> has_private_fort(const Graph& g, VertexSet s, int x) {
  if (x < 0 || x >= g.order() || !s.contains(x)) {
    throw PreconditionError("has_private_fort: vertex " + std::to_string(x) + " is not in S");
  }
  const VertexSet outside = g.vertices() - closure(g, s.without(x));
  if (!outside.contains(x)) return std::nullopt;
  return PrivateFortCertificate{x, outside, s};
}

std::optional<FortSet> minimal_private_fort(const Graph& g, VertexSet s, int x) {
  auto cert = has_private_fort(g, s, x);
  if (!cert) return std::nullopt;
  VertexSet fort = cert->fort;
  // Drop y whenever a fort through x survives inside fort \ {y}; that fort is
  // still private because it only shrank. Stops when no single removal works,
  // which is exactly inclusion-minimality among private forts of x.
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (int y = fort.highest(); y >= 0; --y) {
      if (y == x || !fort.contains(y)) continue;
      const auto inner = max_fort_within(g, fort.without(y));
      if (inner && inner->members().contains(x)) {
        fort = inner->members();
        shrunk = true;
        break;
      }
    }
  }
  return make_fort(g, fort);
}

bool is_zir_set(const Graph& g, VertexSet s) {
  for (int x : s) {
    if (!owns_private_fort(g, s, x)) return false;
  }
  return true;
}

bool is_maximal_zir_set(const Graph& g, VertexSet s) {
  if (!is_zir_set(g, s)) return false;
  for (int v : g.vertices() - s) {
    if (is_zir_set(g, s.with(v))) return false;
  }
  return true;
}

std::optional<ZirWitness> certify(const Graph& g, VertexSet s) {
  ZirWitness w;
  w.set = s;
  for (int x : s) {
    auto cert = has_private_fort(g, s, x);
    if (!cert) return std::nullopt;
    w.certificates.push_back(*cert);
  }
  w.maximal = is_maximal_zir_set(g, s);
  return w;
}

namespace {

/// Candidates u from `pool` for which s + u is still a ZIr-set. By heredity,
/// anything else can never join a superset of s.
VertexSet live_extensions(const Graph& g, VertexSet s, VertexSet pool) {
  VertexSet live;
  for (int u : pool) {
    if (is_zir_set(g, s.with(u))) live.insert(u);
  }
  return live;
}

class MaxZirSearch {
 public:
  MaxZirSearch(const Graph& g, VertexSet best, int ceiling) : g_(g), best_(best), ceiling_(ceiling) {}

  VertexSet run(VertexSet pool) {
    if (best_.size() < ceiling_) descend(VertexSet{}, live_extensions(g_, VertexSet{}, pool));
    return best_;
  }

 private:
  void descend(VertexSet current, VertexSet live) {
    if (current.size() > best_.size()) best_ = current;
    if (best_.size() >= ceiling_) return;
    if (current.size() + live.size() <= best_.size()) return;
    const int v = live.lowest();
    const VertexSet rest = live.without(v);
    const VertexSet grown = current.with(v);
    descend(grown, live_extensions(g_, grown, rest));
    if (best_.size() >= ceiling_) return;
    descend(current, rest);
  }

  const Graph& g_;
  VertexSet best_;
  int ceiling_;
};

ZirValue to_value(const Graph& g, VertexSet s) {
  auto w = certify(g, s);
  if (!w) throw std::logic_error("search produced a set that is not ZIr");
  return {s.size(), *w};
}

}  // namespace

ZirValue max_zir_set_within(const Graph& g, VertexSet pool, SearchLimits limits) {
  check_budget(g, limits.max_order, "maximum ZIr-set search");
  return to_value(g, MaxZirSearch(g, VertexSet{}, pool.size()).run(pool));
}

ZirValue upper_zir_number(const Graph& g, SearchLimits limits) {
  check_budget(g, limits.max_order, "upper ZIr number");
  const int n = g.order();
  if (!g.has_edge()) return to_value(g, g.vertices());

  // Incumbent: the complement of a minimum 2-dominating set is a ZIr-set
  // (each member v owns D + v).
  const auto two_dom = k_domination_number(g, 2, limits);
  VertexSet incumbent = g.vertices() - two_dom.witness;
  if (!is_zir_set(g, incumbent)) incumbent = VertexSet{};

  int ceiling = n - 1;
  if (!g.has_isolated_vertex() && n >= 2) {
    ceiling = std::min(ceiling, n - k_domination_number(g, 1, limits).value);
  }
  if (g.is_connected() && n >= 2) {
    const int delta = g.max_degree();
    ceiling = std::min(ceiling, delta * n / (delta + 1));
  }
  return to_value(g, MaxZirSearch(g, incumbent, ceiling).run(g.vertices()));
}

ZirValue lower_zir_number(const Graph& g, SearchLimits limits) {
  check_budget(g, limits.max_order, "lower ZIr number");
  std::vector<VertexSet> level{VertexSet{}};
  while (!level.empty()) {
    for (VertexSet s : level) {
      if (is_maximal_zir_set(g, s)) return to_value(g, s);
    }
    std::vector<VertexSet> next;
    for (VertexSet s : level) {
      const int from = s.empty() ? 0 : s.highest() + 1;
      for (int v = from; v < g.order(); ++v) {
        if (is_zir_set(g, s.with(v))) next.push_back(s.with(v));
      }
    }
    level = std::move(next);
  }
  // Unreachable: the largest ZIr-sets are maximal.
  throw std::logic_error("no maximal ZIr-set found");
}

std::vector<VertexSet> zir_sets_of_size(const Graph& g, int size, SearchLimits limits) {
  check_budget(g, limits.max_order, "ZIr-set enumeration");
  std::vector<VertexSet> out;
  std::function<void(VertexSet, VertexSet)> walk = [&](VertexSet current, VertexSet live) {
    if (current.size() == size) {
      out.push_back(current);
      return;
    }
    if (current.size() + live.size() < size) return;
    VertexSet rest = live;
    for (int v : live) {
      rest.erase(v);
      if (current.size() + 1 + rest.size() < size) break;
      const VertexSet grown = current.with(v);
      walk(grown, live_extensions(g, grown, rest));
    }
  };
  walk(VertexSet{}, live_extensions(g, VertexSet{}, g.vertices()));
  return out;
}

std::optional<FortSet> abandons_fort(const Graph& g, VertexSet s) {
  if (!is_maximal_zir_set(g, s)) {
    throw PreconditionError("abandons_fort: " + s.to_string() + " is not a maximal ZIr-set");
  }
  return max_fort_avoiding(g, s);
}

AbandonResult graph_abandons_fort(const Graph& g, SearchLimits limits) {
  const int top = upper_zir_number(g, limits).value;
  for (VertexSet s : zir_sets_of_size(g, top, limits)) {
    if (auto fort = max_fort_avoiding(g, s)) {
      return {true, certify(g, s), fort};
    }
  }
  return {};
}

}  // namespace zir
