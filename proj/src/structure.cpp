#include <algorithm>
#include <functional>

#include "zir/verify.hpp"

namespace zir {

bool is_clique_plus_isolated(const Graph& g) {
  VertexSet core;
  for (VertexSet c : g.components()) {
    if (c.size() == 1) continue;
    if (!core.empty()) return false;
    core = c;
  }
  if (core.size() < 2) return false;
  for (int v : core) {
    if (g.neighbors(v) != core.without(v)) return false;
  }
  return true;
}

bool is_path(const Graph& g) {
  return g.is_connected() && g.max_degree() <= 2 && g.edge_count() == g.order() - 1;
}

bool is_star(const Graph& g) {
  const int n = g.order();
  if (n < 2 || g.edge_count() != n - 1) return false;
  for (int v : g.vertices()) {
    if (g.degree(v) == n - 1) return true;
  }
  return false;
}

namespace {

/// Complete bipartite check for a connected component; returns (q, p) with
/// q <= p.
std::optional<std::pair<int, int>> as_biclique(const Graph& h, VertexSet comp) {
  if (comp.size() == 1) return std::pair{0, 1};
  // 2-color from the lowest vertex.
  VertexSet side_a = VertexSet::single(comp.lowest());
  VertexSet side_b;
  VertexSet frontier = side_a;
  VertexSet seen = side_a;
  bool on_a = true;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= h.neighbors(v) & comp;
    next -= seen;
    seen |= next;
    on_a = !on_a;
    (on_a ? side_a : side_b) |= next;
    frontier = next;
  }
  for (int v : side_a) {
    if (h.neighbors(v) != side_b) return std::nullopt;
  }
  for (int v : side_b) {
    if (h.neighbors(v) != side_a) return std::nullopt;
  }
  const int q = std::min(side_a.size(), side_b.size());
  const int p = std::max(side_a.size(), side_b.size());
  return std::pair{q, p};
}

bool is_clique(const Graph& h, VertexSet comp) {
  for (int v : comp) {
    if (h.neighbors(v) != comp.without(v)) return false;
  }
  return true;
}

}  // namespace

std::optional<ComplementForm> recognize_zn2_complement_form(const Graph& g) {
  const Graph h = complement(g);
  const int n = h.order();
  VertexSet universal;
  for (int v : h.vertices()) {
    if (h.degree(v) == n - 1) universal.insert(v);
  }
  ComplementForm form;
  form.universal = universal.size();
  int empty_side = 0;
  if (universal.size() < n) {
    const Graph rest = h.induced(h.vertices() - universal);
    for (VertexSet comp : rest.components()) {
      if (comp.size() >= 3 && is_clique(rest, comp)) {
        form.cliques.push_back(comp.size());
      } else if (auto qp = as_biclique(rest, comp)) {
        if (qp->first == 0) {
          empty_side += qp->second;
        } else {
          form.bicliques.push_back(*qp);
        }
      } else {
        return std::nullopt;
      }
    }
  }
  if (empty_side > 0) form.bicliques.emplace_back(0, empty_side);
  std::sort(form.cliques.rbegin(), form.cliques.rend());
  std::sort(form.bicliques.begin(), form.bicliques.end(), [](auto a, auto b) { return a > b; });
  const int k = static_cast<int>(form.bicliques.size());
  const int q1 = k > 0 ? form.bicliques.front().first : 0;
  form.zir_side_conditions = form.cliques.empty() && k >= 1 && (q1 >= 2 || (q1 == 1 && k >= 2));
  return form;
}

std::string ComplementForm::to_string() const {
  std::string out;
  auto piece = [&](const std::string& s) { out += (out.empty() ? "" : " + ") + s; };
  for (int s : cliques) piece("K" + std::to_string(s));
  for (auto [q, p] : bicliques) piece("K" + std::to_string(q) + "," + std::to_string(p));
  if (out.empty()) out = "(empty)";
  if (universal > 0) out = "(" + out + ") v K" + std::to_string(universal);
  return out;
}

}  // namespace zir
