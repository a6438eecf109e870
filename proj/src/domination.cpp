#include "zir/domination.hpp"

#include <algorithm>
#include <optional>

#include "zir/errors.hpp"

namespace zir {

namespace {

void check_budget(const Graph& g, int max_order, const char* what) {
  if (g.order() > max_order) {
    throw BudgetExceeded(std::string(what) + ": order " + std::to_string(g.order()) +
                         " exceeds the search budget of " + std::to_string(max_order));
  }
}

/// Smallest forced + t satisfying pred, t drawn from pool; lexicographic ties.
template <typename Pred>
SetValue smallest_satisfying(VertexSet forced, VertexSet pool, Pred pred) {
  for (int k = 0; k <= pool.size(); ++k) {
    std::optional<VertexSet> found;
    for_each_subset_of_size(pool, k, [&](VertexSet t) {
      if (pred(forced | t)) {
        found = forced | t;
        return false;
      }
      return true;
    });
    if (found) return {found->size(), *found};
  }
  throw std::logic_error("search exhausted without a solution");
}

}  // namespace

bool is_k_dominating(const Graph& g, VertexSet d, int k) {
  for (int v : g.vertices() - d) {
    if ((g.neighbors(v) & d).size() < k) return false;
  }
  return true;
}

DominationResult k_domination_number(const Graph& g, int k, SearchLimits limits) {
  if (k < 1) throw InvalidSpec("k-domination requires k >= 1");
  check_budget(g, limits.max_order, "k-domination number");
  VertexSet forced;
  for (int v : g.vertices()) {
    if (g.degree(v) < k) forced.insert(v);
  }
  // Equal-size sets sharing `forced` compare like their free parts, so the
  // lexicographic walk over the free part is lexicographic overall.
  const auto best =
      smallest_satisfying(forced, g.vertices() - forced, [&](VertexSet d) { return is_k_dominating(g, d, k); });
  return {best.value, best.witness, k};
}

bool is_independent(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

namespace {

class IndependentSearch {
 public:
  IndependentSearch(const Graph& g, VertexSet best) : g_(g), best_(best) {}

  VertexSet run() {
    descend(VertexSet{}, g_.vertices());
    return best_;
  }

 private:
  void descend(VertexSet current, VertexSet candidates) {
    if (current.size() > best_.size()) best_ = current;
    if (current.size() + candidates.size() <= best_.size()) return;
    const int v = candidates.lowest();
    descend(current.with(v), candidates - g_.closed_neighbors(v));
    descend(current, candidates.without(v));
  }

  const Graph& g_;
  VertexSet best_;
};

VertexSet greedy_independent(const Graph& g) {
  VertexSet chosen;
  VertexSet open = g.vertices();
  while (!open.empty()) {
    int pick = open.lowest();
    for (int v : open) {
      if ((g.neighbors(v) & open).size() < (g.neighbors(pick) & open).size()) pick = v;
    }
    chosen.insert(pick);
    open -= g.closed_neighbors(pick);
  }
  return chosen;
}

}  // namespace

SetValue independence_number(const Graph& g, SearchLimits limits) {
  check_budget(g, limits.max_order, "independence number");
  const VertexSet best = IndependentSearch(g, greedy_independent(g)).run();
  return {best.size(), best};
}

bool is_power_dominating(const Graph& g, VertexSet s) {
  return closure(g, g.closed_neighbors(s)) == g.vertices();
}

SetValue power_domination_number(const Graph& g, SearchLimits limits) {
  check_budget(g, limits.max_order, "power domination number");
  return smallest_satisfying(VertexSet{}, g.vertices(), [&](VertexSet s) { return is_power_dominating(g, s); });
}

}  // namespace zir
