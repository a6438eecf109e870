#pragma once

#include <string>
#include <string_view>

#include "zir/graph.hpp"

namespace zir {

/// Short-form graph6 (orders 1..62). Throws ParseError naming the byte offset
/// of the first bad byte.
Graph parse_graph6(std::string_view text);

/// Throws SizeLimitError for orders above 62.
std::string to_graph6(const Graph& g);

}  // namespace zir
