#pragma once

#include "zir/forcing.hpp"

namespace zir {

struct DominationResult {
  int value = 0;
  VertexSet witness;
  int k = 1;
  bool operator==(const DominationResult&) const = default;
};

/// Every vertex outside d has at least k neighbors in d.
bool is_k_dominating(const Graph& g, VertexSet d, int k);

/// Minimum k-dominating set, k >= 1 (k = 1 gives the domination number).
/// Vertices of degree below k are in every such set. Ties go to the
/// lexicographically first set.
DominationResult k_domination_number(const Graph& g, int k, SearchLimits limits = {});

bool is_independent(const Graph& g, VertexSet s);

/// Maximum independent set by branch and bound, seeded with a greedy set.
SetValue independence_number(const Graph& g, SearchLimits limits = {});

/// closure(N[s]) covers every vertex.
bool is_power_dominating(const Graph& g, VertexSet s);

/// Minimum power dominating set, first in (size, lexicographic) order.
SetValue power_domination_number(const Graph& g, SearchLimits limits = {});

}  // namespace zir
