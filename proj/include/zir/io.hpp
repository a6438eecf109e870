#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "zir/graph.hpp"

namespace zir {

struct NamedGraph {
  std::string id;
  Graph graph;
};

/// One graph6 string per line; blank lines, '#' comments and a leading
/// ">>graph6<<" header are skipped. Errors are prefixed with "<source>:<line>: ".
std::vector<NamedGraph> read_graph6_lines(std::istream& in, std::string_view source);

/// Edge-list text: the order on the first line, then one "u v" pair (0-based)
/// per line. '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace zir
