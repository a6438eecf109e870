#include "zir/forcing.hpp"

#include "zir/errors.hpp"

namespace zir {

namespace {

void check_budget(const Graph& g, int max_order, const char* what) {
  if (g.order() > max_order) {
    throw BudgetExceeded(std::string(what) + ": order " + std::to_string(g.order()) +
                         " exceeds the search budget of " + std::to_string(max_order));
  }
}

}  // namespace

VertexSet closure(const Graph& g, VertexSet blue) {
  const int n = g.order();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!blue.contains(v)) continue;
      const VertexSet white = g.neighbors(v) - blue;
      if (white.size() == 1) {
        blue |= white;
        changed = true;
      }
    }
  }
  return blue;
}

VertexSet closure(const Graph& g, VertexSet blue, std::vector<ForceStep>& chronicle) {
  chronicle.clear();
  const int n = g.order();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!blue.contains(v)) continue;
      const VertexSet white = g.neighbors(v) - blue;
      if (white.size() == 1) {
        chronicle.push_back({v, white.lowest(), static_cast<int>(chronicle.size()) + 1});
        blue |= white;
        changed = true;
      }
    }
  }
  return blue;
}

bool is_zero_forcing_set(const Graph& g, VertexSet b) { return closure(g, b) == g.vertices(); }

bool is_fort(const Graph& g, VertexSet f) {
  if (f.empty() || !f.is_subset_of(g.vertices())) return false;
  for (int v : g.vertices() - f) {
    if ((g.neighbors(v) & f).size() == 1) return false;
  }
  return true;
}

std::optional<FortSet> make_fort(const Graph& g, VertexSet f) {
  if (!is_fort(g, f)) return std::nullopt;
  return FortSet(f);
}

std::optional<FortSet> max_fort_avoiding(const Graph& g, VertexSet a) {
  const VertexSet rest = g.vertices() - closure(g, a);
  if (rest.empty()) return std::nullopt;
  return make_fort(g, rest);
}

std::optional<FortSet> max_fort_within(const Graph& g, VertexSet region) {
  return max_fort_avoiding(g, g.vertices() - region);
}

SetValue zero_forcing_number(const Graph& g, SearchLimits limits) {
  check_budget(g, limits.max_order, "zero forcing number");
  const VertexSet all = g.vertices();
  // Every ZFS has at least min-degree members.
  for (int k = g.min_degree(); k <= g.order(); ++k) {
    std::optional<VertexSet> found;
    for_each_subset_of_size(all, k, [&](VertexSet b) {
      if (is_zero_forcing_set(g, b)) {
        found = b;
        return false;
      }
      return true;
    });
    if (found) return {k, *found};
  }
  return {g.order(), all};
}

bool is_minimal_zfs(const Graph& g, VertexSet b) {
  if (!is_zero_forcing_set(g, b)) return false;
  for (int x : b) {
    if (is_zero_forcing_set(g, b.without(x))) return false;
  }
  return true;
}

SetValue upper_zero_forcing_number(const Graph& g, SearchLimits limits) {
  check_budget(g, limits.max_order, "upper zero forcing number");
  const VertexSet all = g.vertices();
  // Each component with an edge can drop one vertex from any ZFS.
  int top = g.order();
  for (VertexSet comp : g.components()) {
    if (comp.size() > 1) --top;
  }
  const int z = zero_forcing_number(g, limits).value;
  for (int k = top; k >= z; --k) {
    std::optional<VertexSet> found;
    for_each_subset_of_size(all, k, [&](VertexSet b) {
      if (is_minimal_zfs(g, b)) {
        found = b;
        return false;
      }
      return true;
    });
    if (found) return {k, *found};
  }
  throw std::logic_error("no minimal zero forcing set found");
}

std::vector<FortSet> enumerate_minimal_forts(const Graph& g) {
  check_budget(g, kFortEnumerationMaxOrder, "minimal fort enumeration");
  std::vector<FortSet> kept;
  const VertexSet all = g.vertices();
  for (int k = 1; k <= g.order(); ++k) {
    for_each_subset_of_size(all, k, [&](VertexSet f) {
      for (const auto& m : kept) {
        if (m.members().is_subset_of(f)) return true;
      }
      if (auto fort = make_fort(g, f)) kept.push_back(*fort);
      return true;
    });
  }
  return kept;
}

bool is_z_irrelevant(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw PreconditionError("vertex out of range");
  for (const auto& f : enumerate_minimal_forts(g)) {
    if (f.members().contains(v)) return false;
  }
  return true;
}

}  // namespace zir
