#include "zir/io.hpp"

#include <charconv>
#include <sstream>

#include "zir/errors.hpp"
#include "zir/graph6.hpp"

namespace zir {

namespace {

std::string_view strip(std::string_view s) {
  const auto hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<int> parse_ints(std::string_view s, int line) {
  std::vector<int> out;
  while (true) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    if (s.empty()) break;
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || (ptr != s.data() + s.size() && !std::isspace(static_cast<unsigned char>(*ptr)))) {
      throw ParseError("edge list: expected integers on line " + std::to_string(line));
    }
    out.push_back(v);
    s.remove_prefix(ptr - s.data());
  }
  return out;
}

}  // namespace

std::vector<NamedGraph> read_graph6_lines(std::istream& in, std::string_view source) {
  std::vector<NamedGraph> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view text = strip(line);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) continue;
    try {
      out.push_back({std::string(text), parse_graph6(text)});
    } catch (const ParseError& e) {
      throw ParseError(std::string(source) + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int n = -1;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    const auto ints = parse_ints(strip(text.substr(start, end - start)), number);
    start = end + 1;
    if (ints.empty()) continue;
    if (n < 0) {
      if (ints.size() != 1) throw ParseError("edge list: first line must hold the order alone");
      n = ints[0];
      continue;
    }
    if (ints.size() != 2) throw ParseError("edge list: expected 'u v' on line " + std::to_string(number));
    if (ints[0] < 0 || ints[0] >= n || ints[1] < 0 || ints[1] >= n) {
      throw ParseError("edge list: vertex out of range on line " + std::to_string(number));
    }
    edges.emplace_back(ints[0], ints[1]);
  }
  if (n < 0) throw ParseError("edge list: missing order line");
  try {
    return Graph::from_edges(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace zir
