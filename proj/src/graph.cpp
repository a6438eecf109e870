#include "zir/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zir/errors.hpp"

namespace zir {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for (int v : *this) {
    if (!first_member) out += ',';
    out += std::to_string(v);
    first_member = false;
  }
  return out + "}";
}

bool lex_less(VertexSet a, VertexSet b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw SizeLimitError("graph order " + std::to_string(n) + " outside [1, 64]");
  }
}

}  // namespace

Graph::Graph(std::vector<VertexSet> adj, std::vector<std::string> labels)
    : adj_(std::move(adj)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != adj_.size()) {
    throw std::invalid_argument("label count does not match graph order");
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges, std::vector<std::string> labels) {
  check_order(n);
  std::vector<VertexSet> adj(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj[u].insert(v);
    adj[v].insert(u);
  }
  return Graph(std::move(adj), std::move(labels));
}

Graph Graph::from_rows(std::vector<VertexSet> rows, std::vector<std::string> labels) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const VertexSet all = VertexSet::first(n);
  for (int v = 0; v < n; ++v) {
    if (!rows[v].is_subset_of(all)) throw std::invalid_argument("adjacency row out of range");
    if (rows[v].contains(v)) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
    for (int u : rows[v]) {
      if (!rows[u].contains(v)) throw std::invalid_argument("asymmetric adjacency");
    }
  }
  return Graph(std::move(rows), std::move(labels));
}

VertexSet Graph::closed_neighbors(VertexSet s) const {
  VertexSet out = s;
  for (int v : s) out |= adj_[v];
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto row : adj_) twice += row.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int Graph::min_degree() const {
  int d = order();
  for (auto row : adj_) d = std::min(d, row.size());
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (auto row : adj_) d = std::max(d, row.size());
  return d;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet unseen = vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::single(unseen.lowest());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= adj_[v];
      frontier = next - comp;
      comp |= frontier;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

bool Graph::is_connected() const { return components().size() == 1; }

VertexSet Graph::leaves() const {
  VertexSet out;
  for (int v = 0; v < order(); ++v) {
    if (degree(v) == 1) out.insert(v);
  }
  return out;
}

Graph Graph::induced(VertexSet keep) const {
  std::vector<int> index(order(), -1);
  int next = 0;
  for (int v : keep) index[v] = next++;
  std::vector<VertexSet> rows(next);
  std::vector<std::string> names;
  for (int v : keep) {
    for (int u : adj_[v] & keep) rows[index[v]].insert(index[u]);
    if (!labels_.empty()) names.push_back(labels_[v]);
  }
  return from_rows(std::move(rows), std::move(names));
}

std::string Graph::label(int v) const {
  if (!labels_.empty()) return labels_[v];
  return "v" + std::to_string(v);
}

Graph Graph::with_labels(std::vector<std::string> labels) const { return Graph(adj_, std::move(labels)); }

namespace {

std::vector<std::string> merged_labels(const Graph& g, const Graph& h) {
  if (g.labels().empty() && h.labels().empty()) return {};
  std::vector<std::string> out;
  for (int v = 0; v < g.order(); ++v) out.push_back(g.label(v));
  for (int v = 0; v < h.order(); ++v) out.push_back(h.label(v));
  return out;
}

void check_combined(long total) {
  if (total > kMaxOrder) {
    throw SizeLimitError("product order " + std::to_string(total) + " exceeds the 64-vertex cap");
  }
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) {
  check_combined(static_cast<long>(g.order()) + h.order());
  const int shift = g.order();
  std::vector<VertexSet> rows;
  for (int v = 0; v < g.order(); ++v) rows.push_back(g.neighbors(v));
  for (int v = 0; v < h.order(); ++v) rows.emplace_back(h.neighbors(v).bits() << shift);
  return Graph::from_rows(std::move(rows), merged_labels(g, h));
}

Graph join(const Graph& g, const Graph& h) {
  check_combined(static_cast<long>(g.order()) + h.order());
  const int shift = g.order();
  const VertexSet g_side = VertexSet::first(g.order());
  const VertexSet h_side{VertexSet::first(h.order()).bits() << shift};
  std::vector<VertexSet> rows;
  for (int v = 0; v < g.order(); ++v) rows.push_back(g.neighbors(v) | h_side);
  for (int v = 0; v < h.order(); ++v) rows.push_back(VertexSet{h.neighbors(v).bits() << shift} | g_side);
  return Graph::from_rows(std::move(rows), merged_labels(g, h));
}

Graph corona(const Graph& g, const Graph& h) {
  const long ng = g.order();
  const long nh = h.order();
  check_combined(ng * (1 + nh));
  const int n = static_cast<int>(ng * (1 + nh));
  std::vector<VertexSet> rows(n);
  for (int v = 0; v < ng; ++v) rows[v] = g.neighbors(v);
  for (int i = 0; i < ng; ++i) {
    const int base = static_cast<int>(ng + i * nh);
    for (int w = 0; w < nh; ++w) {
      rows[base + w] = VertexSet{h.neighbors(w).bits() << base}.with(i);
      rows[i].insert(base + w);
    }
  }
  std::vector<std::string> names;
  if (!g.labels().empty() || !h.labels().empty()) {
    for (int v = 0; v < ng; ++v) names.push_back(g.label(v));
    for (int i = 0; i < ng; ++i) {
      for (int w = 0; w < nh; ++w) names.push_back(h.label(w) + "@" + g.label(i));
    }
  }
  return Graph::from_rows(std::move(rows), std::move(names));
}

Graph complement(const Graph& g) {
  const VertexSet all = g.vertices();
  std::vector<VertexSet> rows;
  for (int v = 0; v < g.order(); ++v) rows.push_back((all - g.neighbors(v)).without(v));
  return Graph::from_rows(std::move(rows), g.labels());
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  std::vector<VertexSet> rows(g.order());
  for (int v = 0; v < g.order(); ++v) {
    for (int u : g.neighbors(v)) rows[perm[v]].insert(perm[u]);
  }
  return Graph::from_rows(std::move(rows));
}

std::vector<VertexSet> twin_classes(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> out;
  VertexSet assigned;
  for (int v = 0; v < n; ++v) {
    if (assigned.contains(v)) continue;
    // A vertex cannot have both an independent and an adjacent twin partner
    // within one class, so grow the larger of the two candidate classes.
    VertexSet open_class = VertexSet::single(v);
    VertexSet closed_class = VertexSet::single(v);
    for (int u = v + 1; u < n; ++u) {
      if (assigned.contains(u)) continue;
      if (g.neighbors(u) == g.neighbors(v)) open_class.insert(u);
      if (g.closed_neighbors(u) == g.closed_neighbors(v)) closed_class.insert(u);
    }
    VertexSet cls = open_class.size() >= closed_class.size() ? open_class : closed_class;
    out.push_back(cls);
    assigned |= cls;
  }
  return out;
}

std::vector<Edge> vertex_pairs(int n) {
  std::vector<Edge> out;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) out.emplace_back(i, j);
  }
  return out;
}

std::uint64_t labeled_graph_count(int n) {
  const int pairs = n * (n - 1) / 2;
  return std::uint64_t{1} << pairs;
}

Graph labeled_graph(int n, std::uint64_t mask) {
  const auto pairs = vertex_pairs(n);
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < pairs.size(); ++b) {
    if ((mask >> b) & 1U) edges.push_back(pairs[b]);
  }
  return Graph::from_edges(n, edges);
}

std::uint64_t edge_mask(const Graph& g) {
  if (g.order() > 11) throw SizeLimitError("edge mask needs order <= 11");
  const auto pairs = vertex_pairs(g.order());
  std::uint64_t mask = 0;
  for (std::size_t b = 0; b < pairs.size(); ++b) {
    if (g.has_edge(pairs[b].first, pairs[b].second)) mask |= std::uint64_t{1} << b;
  }
  return mask;
}

void enumerate_labeled_graphs(int n, bool connected_only,
                              const std::function<bool(const Graph&, std::uint64_t)>& visit) {
  if (n < 1 || n > 7) throw std::out_of_range("labeled enumeration supports 1 <= n <= 7");
  const std::uint64_t count = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Graph g = labeled_graph(n, mask);
    if (connected_only && !g.is_connected()) continue;
    if (!visit(g, mask)) return;
  }
}

std::uint64_t canonical_mask(const Graph& g) {
  const int n = g.order();
  if (n > 8) throw SizeLimitError("exhaustive canonical form limited to order <= 8");
  const auto pairs = vertex_pairs(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t mask = 0;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (g.has_edge(perm[pairs[b].first], perm[pairs[b].second])) mask |= std::uint64_t{1} << b;
    }
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace zir
