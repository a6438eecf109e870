#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zir/vertex_set.hpp"

namespace zir {

using Edge = std::pair<int, int>;

/// Immutable simple graph on at most 64 vertices. Each adjacency row is a
/// VertexSet, so neighborhood algebra is a handful of word operations.
class Graph {
 public:
  /// Throws SizeLimitError if n is outside [1, 64] and std::invalid_argument on
  /// loops or out-of-range endpoints. Duplicate edges are merged.
  static Graph from_edges(int n, std::span<const Edge> edges, std::vector<std::string> labels = {});
  static Graph from_edges(int n, std::initializer_list<Edge> edges, std::vector<std::string> labels = {}) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(labels));
  }
  /// Rows must be symmetric and irreflexive; checked.
  static Graph from_rows(std::vector<VertexSet> rows, std::vector<std::string> labels = {});

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::first(order()); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighbors(int v) const { return adj_[v].with(v); }
  /// N[S], the union of closed neighborhoods.
  VertexSet closed_neighbors(VertexSet s) const;
  int degree(int v) const { return adj_[v].size(); }
  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  int edge_count() const;
  std::vector<Edge> edges() const;

  int min_degree() const;
  int max_degree() const;
  bool has_edge() const { return edge_count() > 0; }
  bool has_isolated_vertex() const { return min_degree() == 0; }
  bool is_connected() const;
  /// Vertex sets of the connected components, ordered by lowest member.
  std::vector<VertexSet> components() const;
  VertexSet leaves() const;

  /// Subgraph induced by `keep`, vertices renumbered in ascending order.
  Graph induced(VertexSet keep) const;

  const std::vector<std::string>& labels() const { return labels_; }
  /// Display name of v: its label if present, else "v<index>".
  std::string label(int v) const;
  Graph with_labels(std::vector<std::string> labels) const;

  /// Structural equality (labels ignored).
  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  explicit Graph(std::vector<VertexSet> adj, std::vector<std::string> labels);
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
/// Order n_G(1+n_H): the vertices of g first, then the copy of h attached to
/// vertex 0, then the copy attached to vertex 1, and so on.
Graph corona(const Graph& g, const Graph& h);
Graph complement(const Graph& g);
/// g with every vertex relabeled through perm (new index of v is perm[v]).
Graph relabel(const Graph& g, std::span<const int> perm);

/// Maximal twin classes. Each class shares its open neighborhood (independent
/// twins) or its closed neighborhood (adjacent twins). Classes are disjoint,
/// cover V, and are ordered by lowest member.
std::vector<VertexSet> twin_classes(const Graph& g);

/// Pairs (i, j), i < j, ordered by j then i; bit b of a labeled-graph mask
/// corresponds to pair b in this order.
std::vector<Edge> vertex_pairs(int n);
std::uint64_t labeled_graph_count(int n);
Graph labeled_graph(int n, std::uint64_t edge_mask);
std::uint64_t edge_mask(const Graph& g);

/// Every labeled simple graph on n vertices (1 <= n <= 7), ascending by edge
/// mask. The visitor returns false to stop.
void enumerate_labeled_graphs(int n, bool connected_only,
                              const std::function<bool(const Graph&, std::uint64_t)>& visit);

/// Lexicographically smallest edge mask over all vertex permutations; equal
/// iff the graphs are isomorphic. Exhaustive, so limited to n <= 8.
std::uint64_t canonical_mask(const Graph& g);

}  // namespace zir
